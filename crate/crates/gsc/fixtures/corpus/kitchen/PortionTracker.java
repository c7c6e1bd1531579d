public class PortionTracker {
    private int expectedDishNumber;
    private int ovenTotal;
    private double averageOvenWeight;
    private double averageDishSize;
    private boolean dishReady;
    private double recipeLength;

    public PortionTracker(int expectedDishNumber, int ovenTotal) {
        this.expectedDishNumber = expectedDishNumber;
        this.ovenTotal = ovenTotal;
        averageOvenWeight = 9.5;
        averageDishSize = 0.3;
        dishReady = false;
        recipeLength = 7.1;
    }

    public double adjustIngredient(double newIngredientSize, double averageIngredientWeight) {
        double averageIngredientLevel = newIngredientSize;
        if (averageIngredientLevel > averageIngredientWeight) {
            averageIngredientLevel = averageIngredientWeight;
        } else {
            averageIngredientLevel = averageIngredientLevel + averageOvenWeight;
        }
        return averageIngredientLevel;
    }

    public double recordOvenOffset(double averageOvenLength) {
        this.averageOvenWeight = averageOvenWeight + averageOvenLength;
        expectedDishNumber++;
        if (expectedDishNumber > ovenTotal) {
            expectedDishNumber = 0;
        }
        return averageOvenWeight;
    }

    public double combineOven(double averageOvenLength, double actualRecipe) {
        double expectedOven = averageOvenLength * actualRecipe;
        expectedOven = expectedOven + recordOvenOffset(averageOvenLength);
        expectedOven += expectedOven;
        return expectedOven - actualRecipe;
    }
}
