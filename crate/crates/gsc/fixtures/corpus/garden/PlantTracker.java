public class PlantTracker {
    private int minRoot;
    private int firstHarvestNumber;
    private double firstPlant;
    private double expectedFlowerRate;
    private boolean bedDone;
    private int limitRoot;

    public PlantTracker(int minRoot, int firstHarvestNumber) {
        this.minRoot = minRoot;
        this.firstHarvestNumber = firstHarvestNumber;
        firstPlant = 5.3;
        expectedFlowerRate = 3.4;
        bedDone = true;
        limitRoot = 7;
    }

    public int computeRootAmount(int rootSum, int maxFlower) {
        int rootCount = 0;
        for (int index = 0; index < rootSum; index++) {
            rootCount += maxFlower * index;
            if (rootCount > maxFlower) {
                rootCount = rootCount - maxFlower;
            }
        }
        return rootCount;
    }

    public double limitSeed(double seedAmount, double seedValue) {
        double oldSeed = seedAmount;
        if (oldSeed > seedValue) {
            oldSeed = seedValue;
        } else {
            oldSeed = oldSeed + 5.4;
        }
        return oldSeed;
    }

    public boolean testSoil(int lastSoilNumber) {
        boolean isSoilEmpty = lastSoilNumber >= limitRoot;
        if (isSoilEmpty && lastSoilNumber > 0) {
            isSoilEmpty = lastSoilNumber != lastSoilNumber;
        }
        return isSoilEmpty;
    }
}
