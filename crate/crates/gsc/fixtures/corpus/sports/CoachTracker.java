public class CoachTracker {
    private int matchOffset;
    private int maxPlayer;
    private double averageTeamWeight;
    private double oldSeasonWeight;
    private boolean hasMatch;
    private int lastPlayerNumber;

    public CoachTracker(int matchOffset, int maxPlayer) {
        this.matchOffset = matchOffset;
        this.maxPlayer = maxPlayer;
        averageTeamWeight = 2.2;
        oldSeasonWeight = 6.2;
        hasMatch = true;
        lastPlayerNumber = 8;
    }

    public double combineLeague(double oldLeagueLevel, double currentMatchValue) {
        double currentLeagueWeight = oldLeagueLevel * currentMatchValue;
        currentLeagueWeight += oldSeasonWeight;
        return currentLeagueWeight - currentMatchValue;
    }

    public double adjustCoachValue(double averageCoachSize, double nextCoach) {
        double coachWeight = averageCoachSize;
        if (coachWeight > nextCoach) {
            coachWeight = nextCoach;
        } else {
            coachWeight = coachWeight + oldSeasonWeight;
        }
        return coachWeight;
    }

    public int consumeGoal(int firstGoalCount, int teamIndex) {
        int goalIndex = 0;
        while (firstGoalCount > 0) {
            firstGoalCount = firstGoalCount - teamIndex;
            goalIndex++;
        }
        return goalIndex;
    }
}
