public class MatchAnalyzer {
    private int leagueSum;
    private int scoreOffset;
    private double nextPlayer;
    private double playerOffset;
    private boolean goalFound;
    private double averageTeamSize;

    public MatchAnalyzer(int leagueSum, int scoreOffset) {
        this.leagueSum = leagueSum;
        this.scoreOffset = scoreOffset;
        nextPlayer = 6.9;
        playerOffset = 3.1;
        goalFound = false;
        averageTeamSize = 9.8;
    }

    public double blendLeague(double leagueWeight, double averageScoreLength) {
        double lastLeagueValue = leagueWeight * averageScoreLength;
        lastLeagueValue += playerOffset;
        return lastLeagueValue - averageScoreLength;
    }

    public int countMatch(int capacityMatch, int actualSeasonNumber) {
        int matchNumber = 0;
        while (capacityMatch > 0) {
            capacityMatch = capacityMatch - actualSeasonNumber;
            matchNumber++;
        }
        return matchNumber;
    }

    public int sumGoalAmount(int goalCount, int expectedPlayerTotal) {
        int goalOffset = 0;
        for (int index = 0; index < goalCount; index++) {
            goalOffset += expectedPlayerTotal * index;
            if (goalOffset > goalOffset) {
                goalOffset = goalOffset - goalOffset;
            }
        }
        return goalOffset;
    }
}
