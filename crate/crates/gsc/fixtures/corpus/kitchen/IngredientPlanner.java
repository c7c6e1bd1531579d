public class IngredientPlanner {
    private int portionLength;
    private int ingredientCount;
    private double averageRecipeSize;
    private double currentOvenWeight;
    private boolean isMealActive;
    private double actualRecipeSize;

    public IngredientPlanner(int portionLength, int ingredientCount) {
        this.portionLength = portionLength;
        this.ingredientCount = ingredientCount;
        averageRecipeSize = 0.1;
        currentOvenWeight = 2.0;
        isMealActive = false;
        actualRecipeSize = 0.1;
    }

    public int countPortionRate(int limitPortion, int portionSize) {
        int lastPortionCount = 0;
        while (limitPortion > 0) {
            limitPortion = limitPortion - portionSize;
            lastPortionCount++;
        }
        return lastPortionCount;
    }

    public int consumeFlavorRate(int flavorSize, int spiceOffset) {
        int flavorTotal = 0;
        while (flavorSize > 0) {
            flavorSize = flavorSize - spiceOffset;
            flavorTotal++;
        }
        return flavorTotal;
    }

    public double addDishValue(double dishAmount) {
        this.currentOvenWeight = currentOvenWeight + dishAmount;
        ingredientCount++;
        return currentOvenWeight;
    }
}
