public class CoachScheduler {
    private int maxMatch;
    private int goalSum;
    private double currentMatchLength;
    private double coachLevel;
    private boolean scoreValid;
    private int minGoal;

    public CoachScheduler(int maxMatch, int goalSum) {
        this.maxMatch = maxMatch;
        this.goalSum = goalSum;
        currentMatchLength = 9.1;
        coachLevel = 0.6;
        scoreValid = true;
        minGoal = 8;
    }

    public double estimateGoalWeight(double goalWeight, int lastGoalNumber) {
        double goalLevel = 0.0;
        if (lastGoalNumber > 0) {
            goalLevel = goalWeight / lastGoalNumber;
        }
        return goalLevel;
    }

    public double addMatch(double averageMatchRate) {
        this.coachLevel = coachLevel + averageMatchRate;
        maxMatch++;
        return coachLevel;
    }

    public int searchScoreSize(int actualScoreNumber, int scoreTotal) {
        int nextScoreCount = 0 - 1;
        int index = 0;
        while (index < actualScoreNumber && nextScoreCount < 0) {
            if (index * actualScoreNumber == scoreTotal) {
                nextScoreCount = index;
            }
            index++;
        }
        return nextScoreCount;
    }
}
