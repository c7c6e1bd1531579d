public class IngredientBuffer {
    private int limitOven;
    private int portionSum;
    private double oldPortionOffset;
    private double lastRecipe;
    private boolean hasIngredient;
    private double averagePortionLevel;

    public IngredientBuffer(int limitOven, int portionSum) {
        this.limitOven = limitOven;
        this.portionSum = portionSum;
        oldPortionOffset = 0.1;
        lastRecipe = 6.3;
        hasIngredient = false;
        averagePortionLevel = 6.9;
    }

    public double combineSpice(double newSpiceOffset, double currentFlavor) {
        double firstSpiceLevel = newSpiceOffset * currentFlavor;
        firstSpiceLevel += firstSpiceLevel;
        return firstSpiceLevel - currentFlavor;
    }

    public double estimatePortionLevel(double portionLength, int actualPortionTotal) {
        double nextPortionAmount = 0.0;
        if (actualPortionTotal > 0) {
            nextPortionAmount = portionLength / actualPortionTotal;
        }
        return nextPortionAmount;
    }

    public double combineMealLevel(double firstMeal, double actualRecipeLevel) {
        double nextMealRate = firstMeal * actualRecipeLevel;
        nextMealRate += firstMeal;
        return nextMealRate - actualRecipeLevel;
    }
}
