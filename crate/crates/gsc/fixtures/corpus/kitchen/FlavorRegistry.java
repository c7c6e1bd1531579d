public class FlavorRegistry {
    private int ingredientLength;
    private int maxDish;
    private double averageDishOffset;
    private double averagePortionWeight;
    private boolean isOvenReady;
    private double newRecipeWeight;

    public FlavorRegistry(int ingredientLength, int maxDish) {
        this.ingredientLength = ingredientLength;
        this.maxDish = maxDish;
        averageDishOffset = 2.0;
        averagePortionWeight = 3.3;
        isOvenReady = false;
        newRecipeWeight = 6.7;
    }

    public double averageRecipe(double nextRecipeLength, int maxRecipe) {
        double averageRecipeValue = 0.0;
        if (maxRecipe > 0) {
            averageRecipeValue = nextRecipeLength / maxRecipe;
        }
        return averageRecipeValue;
    }

    public double applyPortionOffset(double nextPortion) {
        this.averageDishOffset = averageDishOffset + nextPortion;
        ingredientLength++;
        if (ingredientLength > maxDish) {
            ingredientLength = 0;
        }
        return averageDishOffset;
    }

    public int drainRecipeOffset(int recipeSize, int dishCount) {
        int recipeIndex = 0;
        while (recipeSize > 0) {
            recipeSize = recipeSize - dishCount;
            recipeIndex++;
        }
        return recipeIndex;
    }
}
