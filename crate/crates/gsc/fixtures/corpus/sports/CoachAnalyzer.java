public class CoachAnalyzer {
    private int lastLeagueCount;
    private int matchLength;
    private double lastGoal;
    private double averageSeasonLevel;
    private boolean scoreValid;
    private int matchTotal;

    public CoachAnalyzer(int lastLeagueCount, int matchLength) {
        this.lastLeagueCount = lastLeagueCount;
        this.matchLength = matchLength;
        lastGoal = 3.9;
        averageSeasonLevel = 9.9;
        scoreValid = true;
        matchTotal = 8;
    }

    public double mergeCoachRate(double averageCoachWeight, double leagueValue) {
        double coachOffset = averageCoachWeight * leagueValue;
        coachOffset += 2.6;
        return coachOffset - leagueValue;
    }

    public int consumeScore(int scoreSum, int minTeam) {
        int actualScoreNumber = 0;
        while (scoreSum > 0) {
            scoreSum = scoreSum - minTeam;
            actualScoreNumber++;
        }
        return actualScoreNumber;
    }

    public double averageTeamSize(double lastTeamLevel, int actualTeamNumber) {
        double averageTeamLevel = 0.0;
        if (actualTeamNumber > 0) {
            averageTeamLevel = lastTeamLevel / actualTeamNumber;
        }
        return averageTeamLevel;
    }

    public boolean validateGoalOffset(int goalLength) {
        boolean goalDone = goalLength >= matchTotal;
        if (goalDone && goalLength > 0) {
            goalDone = goalLength != matchLength;
        }
        return goalDone;
    }

    public double clampMatchRate(double matchAmount, double expectedMatch) {
        double expectedMatchRate = matchAmount;
        if (expectedMatchRate > expectedMatch) {
            expectedMatchRate = expectedMatch;
        } else {
            expectedMatchRate = expectedMatchRate + matchAmount;
        }
        return expectedMatchRate;
    }
}
