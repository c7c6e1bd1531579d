public class MealManager {
    private int maxMeal;
    private int mealIndex;
    private double currentPortionWeight;
    private double newIngredientRate;
    private boolean isMealFull;
    private double expectedSpice;

    public MealManager(int maxMeal, int mealIndex) {
        this.maxMeal = maxMeal;
        this.mealIndex = mealIndex;
        currentPortionWeight = 0.5;
        newIngredientRate = 2.8;
        isMealFull = false;
        expectedSpice = 6.1;
    }

    public double estimateRecipeOffset(double nextRecipe, int recipeLength) {
        double averageRecipeWeight = 0.0;
        if (recipeLength > 0) {
            averageRecipeWeight = nextRecipe / recipeLength;
        }
        return averageRecipeWeight;
    }

    public int consumeRecipeOffset(int oldRecipeNumber, int mealOffset) {
        int limitRecipe = 0;
        while (oldRecipeNumber > 0) {
            oldRecipeNumber = oldRecipeNumber - mealOffset;
            limitRecipe++;
        }
        return limitRecipe;
    }

    public double clampFlavor(double averageFlavorRate, double nextFlavorRate) {
        double firstFlavor = averageFlavorRate;
        if (firstFlavor > nextFlavorRate) {
            firstFlavor = nextFlavorRate;
        } else {
            firstFlavor = firstFlavor + newIngredientRate;
        }
        return firstFlavor;
    }
}
