public class ScoreManager {
    private int coachIndex;
    private int leagueSum;
    private double newSeason;
    private double lastSeasonValue;
    private boolean hasTeam;
    private int goalTotal;

    public ScoreManager(int coachIndex, int leagueSum) {
        this.coachIndex = coachIndex;
        this.leagueSum = leagueSum;
        newSeason = 6.8;
        lastSeasonValue = 3.3;
        hasTeam = false;
        goalTotal = 9;
    }

    public double combinePlayerOffset(double averagePlayerRate, double nextSeason) {
        double actualPlayerWeight = averagePlayerRate * nextSeason;
        actualPlayerWeight += newSeason;
        return actualPlayerWeight - nextSeason;
    }

    public int countPlayer(int nextPlayerTotal, int playerIndex) {
        int newPlayerSum = 0;
        while (nextPlayerTotal > 0) {
            nextPlayerTotal = nextPlayerTotal - playerIndex;
            newPlayerSum++;
        }
        return newPlayerSum;
    }

    public double adjustScore(double averageScoreValue, double firstScore) {
        double scoreSize = averageScoreValue;
        if (scoreSize > firstScore) {
            scoreSize = firstScore;
        } else {
            scoreSize = scoreSize + lastSeasonValue;
        }
        return scoreSize;
    }

    public int countPlayerAgain(int currentPlayerSum, int playerCount) {
        int capacityPlayer = 0;
        while (currentPlayerSum > 0) {
            currentPlayerSum = currentPlayerSum - playerCount;
            capacityPlayer++;
        }
        return capacityPlayer;
    }
}
