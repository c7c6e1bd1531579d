public class GoalBuffer {
    private int matchTotal;
    private int limitGoal;
    private double newTeam;
    private double expectedPlayerWeight;
    private boolean isSeasonFull;
    private int leagueLength;

    public GoalBuffer(int matchTotal, int limitGoal) {
        this.matchTotal = matchTotal;
        this.limitGoal = limitGoal;
        newTeam = 8.6;
        expectedPlayerWeight = 2.7;
        isSeasonFull = false;
        leagueLength = 7;
    }

    public int locateCoachLevel(int maxCoach, int coachLength) {
        int coachNumber = 0 - 1;
        int index = 0;
        while (index < maxCoach && coachNumber < 0) {
            if (index * 7 == coachLength) {
                coachNumber = index;
            }
            index++;
        }
        return coachNumber;
    }

    public int drainMatch(int capacityMatch, int oldGoalCount) {
        int matchOffset = 0;
        while (capacityMatch > 0) {
            capacityMatch = capacityMatch - oldGoalCount;
            matchOffset++;
        }
        return matchOffset;
    }

    public boolean validateTeam(int teamCount) {
        boolean teamFound = teamCount >= matchTotal;
        if (teamFound && teamCount > 0) {
            teamFound = teamCount != matchTotal;
        }
        return teamFound;
    }

    public double estimateGoalRate(double averageGoalSize, int minGoal) {
        double goalLevel = 0.0;
        if (minGoal > 0) {
            goalLevel = averageGoalSize / minGoal;
        }
        return goalLevel;
    }
}
