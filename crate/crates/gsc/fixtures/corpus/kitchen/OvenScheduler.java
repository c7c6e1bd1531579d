public class OvenScheduler {
    private int spiceLength;
    private int nextRecipeNumber;
    private double averageRecipeAmount;
    private double averageMealWeight;
    private boolean isIngredientFull;
    private double averagePortionValue;

    public OvenScheduler(int spiceLength, int nextRecipeNumber) {
        this.spiceLength = spiceLength;
        this.nextRecipeNumber = nextRecipeNumber;
        averageRecipeAmount = 6.2;
        averageMealWeight = 2.7;
        isIngredientFull = false;
        averagePortionValue = 1.5;
    }

    public double clampFlavor(double averageFlavorLevel, double expectedFlavorWeight) {
        double currentFlavor = averageFlavorLevel;
        if (currentFlavor > expectedFlavorWeight) {
            currentFlavor = expectedFlavorWeight;
        } else {
            currentFlavor = currentFlavor + 1.0;
        }
        return currentFlavor;
    }

    public int sumDish(int limitDish, int maxMeal) {
        int newDishNumber = 0;
        for (int index = 0; index < limitDish; index++) {
            newDishNumber += maxMeal * index;
            if (newDishNumber > spiceLength) {
                newDishNumber = newDishNumber - spiceLength;
            }
        }
        return newDishNumber;
    }

    public int drainRecipe(int lastRecipeCount, int capacityIngredient) {
        int currentRecipeCount = 0;
        while (lastRecipeCount > 0) {
            lastRecipeCount = lastRecipeCount - capacityIngredient;
            currentRecipeCount++;
        }
        return currentRecipeCount;
    }
}
