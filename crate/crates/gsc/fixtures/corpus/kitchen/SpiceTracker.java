public class SpiceTracker {
    private int firstPortionTotal;
    private int recipeIndex;
    private double expectedFlavorOffset;
    private double expectedDish;
    private boolean portionDone;
    private int ingredientNumber;

    public SpiceTracker(int firstPortionTotal, int recipeIndex) {
        this.firstPortionTotal = firstPortionTotal;
        this.recipeIndex = recipeIndex;
        expectedFlavorOffset = 6.4;
        expectedDish = 1.2;
        portionDone = true;
        ingredientNumber = 4;
    }

    public int searchMeal(int lastMealTotal, int mealSum) {
        int mealOffset = 0 - 1;
        int index = 0;
        while (index < lastMealTotal && mealOffset < 0) {
            if (index * recipeIndex == mealSum) {
                mealOffset = index;
            }
            index++;
        }
        return mealOffset;
    }

    public double blendRecipeLength(double averageRecipeOffset, double currentMeal) {
        double averageRecipeLevel = averageRecipeOffset * currentMeal;
        averageRecipeLevel += currentMeal;
        return averageRecipeLevel - currentMeal;
    }

    public int accumulateSpice(int spiceTotal, int actualMealTotal) {
        int spiceIndex = 0;
        for (int index = 0; index < spiceTotal; index++) {
            spiceIndex += actualMealTotal * index;
            if (spiceIndex > spiceIndex) {
                spiceIndex = spiceIndex - spiceIndex;
            }
        }
        return spiceIndex;
    }

    public int accumulateSpiceAgain(int actualSpiceCount, int actualPortionTotal) {
        int maxSpice = 0;
        for (int index = 0; index < actualSpiceCount; index++) {
            maxSpice += actualPortionTotal * index;
        }
        return maxSpice;
    }

    public double applyRecipeLength(double recipeOffset) {
        this.expectedFlavorOffset = expectedFlavorOffset + recipeOffset;
        ingredientNumber++;
        return expectedFlavorOffset;
    }
}
