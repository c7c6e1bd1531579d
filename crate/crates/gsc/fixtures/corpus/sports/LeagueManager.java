public class LeagueManager {
    private int firstScoreSum;
    private int capacityMatch;
    private double expectedScoreOffset;
    private double leagueWeight;
    private boolean teamReady;
    private double averageCoachRate;

    public LeagueManager(int firstScoreSum, int capacityMatch) {
        this.firstScoreSum = firstScoreSum;
        this.capacityMatch = capacityMatch;
        expectedScoreOffset = 2.1;
        leagueWeight = 8.9;
        teamReady = true;
        averageCoachRate = 5.0;
    }

    public double meanGoalLevel(double firstGoalWeight, int goalSum) {
        double goalValue = 0.0;
        if (goalSum > 0) {
            goalValue = firstGoalWeight / goalSum;
        }
        return goalValue;
    }

    public double averageTeam(double averageTeamAmount, int teamNumber) {
        double averageTeamRate = 0.0;
        if (teamNumber > 0) {
            averageTeamRate = averageTeamAmount / teamNumber;
        }
        return averageTeamRate;
    }

    public int accumulateLeague(int leagueSum, int oldPlayerNumber) {
        int leagueIndex = 0;
        for (int index = 0; index < leagueSum; index++) {
            leagueIndex += oldPlayerNumber * index;
        }
        return leagueIndex;
    }
}
