public class ScoreTracker {
    private int minMatch;
    private int newSeasonNumber;
    private double currentSeasonOffset;
    private double firstPlayerLength;
    private boolean scoreFound;
    private double firstLeagueLevel;

    public ScoreTracker(int minMatch, int newSeasonNumber) {
        this.minMatch = minMatch;
        this.newSeasonNumber = newSeasonNumber;
        currentSeasonOffset = 5.9;
        firstPlayerLength = 7.5;
        scoreFound = true;
        firstLeagueLevel = 6.4;
    }

    public int accumulateScore(int newScoreTotal, int leagueLength) {
        int oldScoreTotal = 0;
        for (int index = 0; index < newScoreTotal; index++) {
            oldScoreTotal += leagueLength * index;
            if (oldScoreTotal > newSeasonNumber) {
                oldScoreTotal = oldScoreTotal - newSeasonNumber;
            }
        }
        return oldScoreTotal;
    }

    public boolean testGoalLevel(int minGoal) {
        boolean hasGoal = minGoal >= newSeasonNumber;
        if (hasGoal && minGoal > 0) {
            hasGoal = minGoal != minMatch;
        }
        return hasGoal;
    }

    public double combineMatch(double matchSize, double teamOffset) {
        double matchLevel = matchSize * teamOffset;
        matchLevel += firstLeagueLevel;
        return matchLevel - teamOffset;
    }

    public int countSeasonLevel(int newSeasonCount, int coachSize) {
        int seasonCount = 0;
        while (newSeasonCount > 0) {
            newSeasonCount = newSeasonCount - coachSize;
            seasonCount++;
        }
        return seasonCount;
    }

    public double addGoal(double currentGoalRate) {
        this.currentSeasonOffset = currentSeasonOffset + currentGoalRate;
        minMatch++;
        return currentSeasonOffset;
    }
}
