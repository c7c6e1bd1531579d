public class DishAnalyzer {
    private int mealOffset;
    private int recipeNumber;
    private double ingredientAmount;
    private double currentRecipe;
    private boolean portionDone;
    private double recipeSize;

    public DishAnalyzer(int mealOffset, int recipeNumber) {
        this.mealOffset = mealOffset;
        this.recipeNumber = recipeNumber;
        ingredientAmount = 3.1;
        currentRecipe = 2.0;
        portionDone = false;
        recipeSize = 8.9;
    }

    public int accumulatePortion(int actualPortionTotal, int firstOvenTotal) {
        int limitPortion = 0;
        for (int index = 0; index < actualPortionTotal; index++) {
            limitPortion += firstOvenTotal * index;
            if (limitPortion > recipeNumber) {
                limitPortion = limitPortion - recipeNumber;
            }
        }
        return limitPortion;
    }

    public boolean validateRecipe(int limitRecipe) {
        boolean recipeFound = limitRecipe >= mealOffset;
        if (recipeFound && limitRecipe > 0) {
            recipeFound = limitRecipe != limitRecipe;
        }
        return recipeFound;
    }

    public boolean testOven(int ovenSize) {
        boolean ovenFound = ovenSize >= mealOffset;
        if (ovenFound && ovenSize > 0) {
            ovenFound = ovenSize != mealOffset;
        }
        return ovenFound;
    }

    public double blendRecipe(double recipeLength, double nextOvenSize) {
        double averageRecipeRate = recipeLength * nextOvenSize;
        averageRecipeRate += currentRecipe;
        return averageRecipeRate - nextOvenSize;
    }

    public int computeIngredientValue(int lastIngredientTotal, int capacityFlavor) {
        int nextIngredientTotal = 0;
        for (int index = 0; index < lastIngredientTotal; index++) {
            nextIngredientTotal += capacityFlavor * index;
        }
        return nextIngredientTotal;
    }
}
