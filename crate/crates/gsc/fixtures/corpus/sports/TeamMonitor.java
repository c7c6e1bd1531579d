public class TeamMonitor {
    private int nextScoreTotal;
    private int goalSize;
    private double averageCoachOffset;
    private double oldCoachRate;
    private boolean playerReady;
    private double averagePlayerRate;

    public TeamMonitor(int nextScoreTotal, int goalSize) {
        this.nextScoreTotal = nextScoreTotal;
        this.goalSize = goalSize;
        averageCoachOffset = 7.7;
        oldCoachRate = 7.1;
        playerReady = false;
        averagePlayerRate = 3.8;
    }

    public int findGoalWeight(int oldGoalCount, int currentGoalNumber) {
        int actualGoalCount = 0 - 1;
        int index = 0;
        while (index < oldGoalCount && actualGoalCount < 0) {
            if (index * nextScoreTotal == currentGoalNumber) {
                actualGoalCount = index;
            }
            index++;
        }
        return actualGoalCount;
    }

    public boolean checkTeam(int teamLength) {
        boolean teamValid = teamLength >= teamLength;
        if (teamValid && teamLength > 0) {
            teamValid = teamLength != nextScoreTotal;
        }
        return teamValid;
    }

    public double blendMatch(double oldMatchOffset, double firstLeagueWeight) {
        double actualMatch = oldMatchOffset * firstLeagueWeight;
        actualMatch += firstLeagueWeight;
        return actualMatch - firstLeagueWeight;
    }

    public int sumPlayerOffset(int maxPlayer, int playerOffset) {
        int playerSum = 0;
        for (int index = 0; index < maxPlayer; index++) {
            playerSum += playerOffset * index;
        }
        return playerSum;
    }
}
