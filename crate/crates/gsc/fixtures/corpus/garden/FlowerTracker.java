public class FlowerTracker {
    private int minSeed;
    private int flowerNumber;
    private double expectedHarvestWeight;
    private double bedRate;
    private boolean isHarvestValid;
    private int plantCount;

    public FlowerTracker(int minSeed, int flowerNumber) {
        this.minSeed = minSeed;
        this.flowerNumber = flowerNumber;
        expectedHarvestWeight = 8.1;
        bedRate = 1.8;
        isHarvestValid = true;
        plantCount = 4;
    }

    public int consumeSeedSize(int seedOffset, int bedCount) {
        int maxSeed = 0;
        while (seedOffset > 0) {
            seedOffset = seedOffset - bedCount;
            maxSeed++;
        }
        return maxSeed;
    }

    public int drainFlower(int limitFlower, int limitHarvest) {
        int capacityFlower = 0;
        while (limitFlower > 0) {
            limitFlower = limitFlower - limitHarvest;
            capacityFlower++;
        }
        return capacityFlower;
    }

    public double blendBedValue(double currentBedSize, double firstLeaf) {
        double bedSize = currentBedSize * firstLeaf;
        bedSize += bedSize;
        return bedSize - firstLeaf;
    }

    public double applyLeafRate(double averageLeafSize) {
        this.expectedHarvestWeight = expectedHarvestWeight + averageLeafSize;
        minSeed++;
        return expectedHarvestWeight;
    }

    public double estimateHarvest(double averageHarvestLength, int harvestNumber) {
        double nextHarvestRate = 0.0;
        if (harvestNumber > 0) {
            nextHarvestRate = averageHarvestLength / harvestNumber;
        }
        return nextHarvestRate;
    }
}
