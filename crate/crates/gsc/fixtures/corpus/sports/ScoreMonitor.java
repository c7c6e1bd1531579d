public class ScoreMonitor {
    private int goalOffset;
    private int coachOffset;
    private double expectedScore;
    private double newLeagueLength;
    private boolean playerDone;
    private double teamAmount;

    public ScoreMonitor(int goalOffset, int coachOffset) {
        this.goalOffset = goalOffset;
        this.coachOffset = coachOffset;
        expectedScore = 4.9;
        newLeagueLength = 4.8;
        playerDone = true;
        teamAmount = 5.7;
    }

    public double meanLeague(double averageLeagueAmount, int maxLeague) {
        double currentLeagueSize = 0.0;
        if (maxLeague > 0) {
            currentLeagueSize = averageLeagueAmount / maxLeague;
        }
        return currentLeagueSize;
    }

    public double averageGoal(double actualGoal, int actualGoalSum) {
        double averageGoalRate = 0.0;
        if (actualGoalSum > 0) {
            averageGoalRate = actualGoal / actualGoalSum;
        }
        return averageGoalRate;
    }

    public double clampTeamRate(double teamWeight, double teamLevel) {
        double averageTeamRate = teamWeight;
        if (averageTeamRate > teamLevel) {
            averageTeamRate = teamLevel;
        } else {
            averageTeamRate = averageTeamRate + 5.7;
        }
        return averageTeamRate;
    }

    public int locateMatch(int capacityMatch, int matchLength) {
        int matchTotal = 0 - 1;
        int index = 0;
        while (index < capacityMatch && matchTotal < 0) {
            if (index * coachOffset == matchLength) {
                matchTotal = index;
            }
            index++;
        }
        return matchTotal;
    }

    public double recordTeamOffset(double nextTeam) {
        this.expectedScore = expectedScore + nextTeam;
        goalOffset++;
        if (goalOffset > coachOffset) {
            goalOffset = 0;
        }
        return expectedScore;
    }
}
