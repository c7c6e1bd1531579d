public class SpiceBuffer {
    private int mealIndex;
    private int ingredientNumber;
    private double lastFlavorWeight;
    private double averageFlavorOffset;
    private boolean hasFlavor;
    private int mealOffset;

    public SpiceBuffer(int mealIndex, int ingredientNumber) {
        this.mealIndex = mealIndex;
        this.ingredientNumber = ingredientNumber;
        lastFlavorWeight = 3.1;
        averageFlavorOffset = 3.1;
        hasFlavor = true;
        mealOffset = 5;
    }

    public int drainFlavor(int flavorTotal, int actualSpiceTotal) {
        int firstFlavorSum = 0;
        while (flavorTotal > 0) {
            flavorTotal = flavorTotal - actualSpiceTotal;
            firstFlavorSum++;
        }
        return firstFlavorSum;
    }

    public double estimateSpice(double actualSpice, int lastSpiceNumber) {
        double spiceSize = 0.0;
        if (lastSpiceNumber > 0) {
            spiceSize = actualSpice / lastSpiceNumber;
        }
        return spiceSize;
    }

    public double limitDish(double oldDishSize, double averageDishRate) {
        double lastDish = oldDishSize;
        if (lastDish > averageDishRate) {
            lastDish = averageDishRate;
        } else {
            lastDish = lastDish + oldDishSize;
        }
        return lastDish;
    }
}
