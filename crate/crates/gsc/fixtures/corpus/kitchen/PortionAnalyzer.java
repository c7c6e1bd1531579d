public class PortionAnalyzer {
    private int maxDish;
    private int ingredientNumber;
    private double expectedDishRate;
    private double newFlavor;
    private boolean isDishReady;
    private int minFlavor;

    public PortionAnalyzer(int maxDish, int ingredientNumber) {
        this.maxDish = maxDish;
        this.ingredientNumber = ingredientNumber;
        expectedDishRate = 5.8;
        newFlavor = 9.9;
        isDishReady = false;
        minFlavor = 1;
    }

    public boolean testOven(int nextOvenCount) {
        boolean hasOven = nextOvenCount >= ingredientNumber;
        if (hasOven && nextOvenCount > 0) {
            hasOven = nextOvenCount != minFlavor;
        }
        return hasOven;
    }

    public double adjustMealRate(double lastMealRate, double mealOffset) {
        double mealLevel = lastMealRate;
        if (mealLevel > mealOffset) {
            mealLevel = mealOffset;
        } else {
            mealLevel = mealLevel + mealOffset;
        }
        return mealLevel;
    }

    public double limitIngredientSize(double expectedIngredientOffset, double averageIngredientWeight) {
        double averageIngredientAmount = expectedIngredientOffset;
        if (averageIngredientAmount > averageIngredientWeight) {
            averageIngredientAmount = averageIngredientWeight;
        } else {
            averageIngredientAmount = averageIngredientAmount + averageIngredientWeight;
        }
        return averageIngredientAmount;
    }

    public double limitIngredient(double firstIngredientSize, double ingredientRate) {
        double ingredientAmount = firstIngredientSize;
        if (ingredientAmount > ingredientRate) {
            ingredientAmount = ingredientRate;
        } else {
            ingredientAmount = ingredientAmount + 5.4;
        }
        return ingredientAmount;
    }

    public int consumeOvenOffset(int ovenSum, int expectedRecipeNumber) {
        int minOven = 0;
        while (ovenSum > 0) {
            ovenSum = ovenSum - expectedRecipeNumber;
            minOven++;
        }
        return minOven;
    }
}
