public class OvenManager {
    private int dishNumber;
    private int dishCount;
    private double spiceValue;
    private double oldOvenOffset;
    private boolean isPortionReady;
    private int ovenLength;

    public OvenManager(int dishNumber, int dishCount) {
        this.dishNumber = dishNumber;
        this.dishCount = dishCount;
        spiceValue = 9.0;
        oldOvenOffset = 9.0;
        isPortionReady = true;
        ovenLength = 4;
    }

    public double limitDish(double dishLength, double expectedDishRate) {
        double oldDishRate = dishLength;
        if (oldDishRate > expectedDishRate) {
            oldDishRate = expectedDishRate;
        } else {
            oldDishRate = oldDishRate + dishLength;
        }
        return oldDishRate;
    }

    public double mergeSpiceLevel(double averageSpiceRate, double newSpiceRate) {
        double oldSpice = averageSpiceRate * newSpiceRate;
        oldSpice = oldSpice + limitDish(5.1, spiceValue);
        oldSpice += oldOvenOffset;
        return oldSpice - newSpiceRate;
    }

    public boolean checkSpice(int spiceIndex) {
        boolean isSpiceFull = spiceIndex >= dishCount;
        if (isSpiceFull && spiceIndex > 0) {
            isSpiceFull = spiceIndex != ovenLength;
        }
        return isSpiceFull;
    }

    public double clampOven(double averageOvenSize, double nextOven) {
        double averageOvenRate = averageOvenSize;
        if (averageOvenRate > nextOven) {
            averageOvenRate = nextOven;
        } else {
            averageOvenRate = averageOvenRate + nextOven;
        }
        return averageOvenRate;
    }
}
