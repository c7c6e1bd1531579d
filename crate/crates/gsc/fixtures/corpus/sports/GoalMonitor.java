public class GoalMonitor {
    private int newSeasonSum;
    private int goalNumber;
    private double averageMatchLength;
    private double averageGoalSize;
    private boolean coachValid;
    private int maxTeam;

    public GoalMonitor(int newSeasonSum, int goalNumber) {
        this.newSeasonSum = newSeasonSum;
        this.goalNumber = goalNumber;
        averageMatchLength = 7.1;
        averageGoalSize = 8.5;
        coachValid = false;
        maxTeam = 1;
    }

    public double limitScoreOffset(double scoreWeight, double scoreSize) {
        double oldScoreLength = scoreWeight;
        if (oldScoreLength > scoreSize) {
            oldScoreLength = scoreSize;
        } else {
            oldScoreLength = oldScoreLength + scoreWeight;
        }
        return oldScoreLength;
    }

    public double blendCoach(double newCoachAmount, double goalAmount) {
        double expectedCoach = newCoachAmount * goalAmount;
        expectedCoach = expectedCoach + limitScoreOffset(expectedCoach, averageMatchLength);
        expectedCoach += averageMatchLength;
        return expectedCoach - goalAmount;
    }

    public double applySeasonSize(double seasonLength) {
        this.averageGoalSize = averageGoalSize + seasonLength;
        goalNumber++;
        return averageGoalSize;
    }

    public double meanPlayer(double firstPlayer, int playerNumber) {
        double playerAmount = 0.0;
        if (playerNumber > 0) {
            playerAmount = firstPlayer / playerNumber;
        }
        return playerAmount;
    }
}
