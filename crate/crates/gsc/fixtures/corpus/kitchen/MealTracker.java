public class MealTracker {
    private int lastMealSum;
    private int spiceSize;
    private double portionRate;
    private double averageIngredientLevel;
    private boolean isMealValid;
    private double averageRecipeRate;

    public MealTracker(int lastMealSum, int spiceSize) {
        this.lastMealSum = lastMealSum;
        this.spiceSize = spiceSize;
        portionRate = 9.3;
        averageIngredientLevel = 1.8;
        isMealValid = false;
        averageRecipeRate = 8.6;
    }

    public boolean validateMeal(int nextMealCount) {
        boolean hasMeal = nextMealCount >= nextMealCount;
        if (hasMeal && nextMealCount > 0) {
            hasMeal = nextMealCount != spiceSize;
        }
        return hasMeal;
    }

    public boolean validateMealAgain(int limitMeal) {
        boolean isMealActive = limitMeal >= limitMeal;
        if (isMealActive && limitMeal > 0) {
            isMealActive = limitMeal != 3;
        }
        return isMealActive;
    }

    public double meanPortionValue(double averagePortionOffset, int expectedPortionCount) {
        double portionLevel = 0.0;
        if (expectedPortionCount > 0) {
            portionLevel = averagePortionOffset / expectedPortionCount;
        }
        return portionLevel;
    }
}
