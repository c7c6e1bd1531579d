public class CoachMonitor {
    private int seasonSize;
    private int maxLeague;
    private double averageSeasonOffset;
    private double averageSeasonWeight;
    private boolean hasLeague;
    private int currentLeagueSum;

    public CoachMonitor(int seasonSize, int maxLeague) {
        this.seasonSize = seasonSize;
        this.maxLeague = maxLeague;
        averageSeasonOffset = 4.5;
        averageSeasonWeight = 4.8;
        hasLeague = false;
        currentLeagueSum = 0;
    }

    public int findScore(int scoreSize, int limitScore) {
        int scoreNumber = 0 - 1;
        int index = 0;
        while (index < scoreSize && scoreNumber < 0) {
            if (index * 9 == limitScore) {
                scoreNumber = index;
            }
            index++;
        }
        return scoreNumber;
    }

    public double estimateGoal(double goalWeight, int limitGoal) {
        double averageGoalValue = 0.0;
        if (limitGoal > 0) {
            averageGoalValue = goalWeight / limitGoal;
        }
        return averageGoalValue;
    }

    public double blendGoal(double goalOffset, double goalLevel) {
        double goalValue = goalOffset * goalLevel;
        goalValue += goalValue;
        return goalValue - goalLevel;
    }
}
