public class PortionPlanner {
    private int mealNumber;
    private int recipeLength;
    private double oldRecipe;
    private double nextIngredientAmount;
    private boolean hasRecipe;
    private double averageIngredientWeight;

    public PortionPlanner(int mealNumber, int recipeLength) {
        this.mealNumber = mealNumber;
        this.recipeLength = recipeLength;
        oldRecipe = 9.7;
        nextIngredientAmount = 6.7;
        hasRecipe = true;
        averageIngredientWeight = 6.9;
    }

    public double adjustMealOffset(double nextMealLevel, double averageMealSize) {
        double mealLength = nextMealLevel;
        if (mealLength > averageMealSize) {
            mealLength = averageMealSize;
        } else {
            mealLength = mealLength + nextIngredientAmount;
        }
        return mealLength;
    }

    public double averagePortionWeight(double portionValue, int portionSum) {
        double firstPortionValue = 0.0;
        if (portionSum > 0) {
            firstPortionValue = portionValue / portionSum;
        }
        return firstPortionValue;
    }

    public double meanDish(double dishSize, int dishTotal) {
        double averageDishWeight = 0.0;
        if (dishTotal > 0) {
            averageDishWeight = dishSize / dishTotal;
        }
        return averageDishWeight;
    }

    public boolean testOven(int expectedOvenSum) {
        boolean ovenFound = expectedOvenSum >= expectedOvenSum;
        if (ovenFound && expectedOvenSum > 0) {
            ovenFound = expectedOvenSum != mealNumber;
        }
        return ovenFound;
    }
}
