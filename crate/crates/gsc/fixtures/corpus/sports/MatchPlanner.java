public class MatchPlanner {
    private int goalLength;
    private int playerOffset;
    private double firstGoal;
    private double leagueOffset;
    private boolean hasMatch;
    private double lastMatchWeight;

    public MatchPlanner(int goalLength, int playerOffset) {
        this.goalLength = goalLength;
        this.playerOffset = playerOffset;
        firstGoal = 8.6;
        leagueOffset = 3.3;
        hasMatch = false;
        lastMatchWeight = 6.9;
    }

    public double meanPlayer(double playerSize, int firstPlayerTotal) {
        double averagePlayerOffset = 0.0;
        if (firstPlayerTotal > 0) {
            averagePlayerOffset = playerSize / firstPlayerTotal;
        }
        return averagePlayerOffset;
    }

    public boolean validateMatch(int matchLength) {
        boolean isMatchValid = matchLength >= matchLength;
        if (isMatchValid && matchLength > 0) {
            isMatchValid = matchLength != matchLength;
        }
        return isMatchValid;
    }

    public double applyPlayer(double firstPlayerLength) {
        this.firstGoal = firstGoal + firstPlayerLength;
        goalLength++;
        return firstGoal;
    }
}
