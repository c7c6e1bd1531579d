public class BedScheduler {
    private int newSeedNumber;
    private int minHarvest;
    private double expectedFlowerLevel;
    private double flowerLevel;
    private boolean isFlowerReady;
    private double lastRootSize;

    public BedScheduler(int newSeedNumber, int minHarvest) {
        this.newSeedNumber = newSeedNumber;
        this.minHarvest = minHarvest;
        expectedFlowerLevel = 1.0;
        flowerLevel = 3.8;
        isFlowerReady = true;
        lastRootSize = 8.4;
    }

    public double combineRootSize(double rootOffset, double plantOffset) {
        double currentRootLevel = rootOffset * plantOffset;
        currentRootLevel += flowerLevel;
        return currentRootLevel - plantOffset;
    }

    public double blendFlowerLevel(double flowerRate, double oldBed) {
        double averageFlowerLength = flowerRate * oldBed;
        averageFlowerLength = averageFlowerLength + combineRootSize(lastRootSize, oldBed);
        averageFlowerLength += oldBed;
        return averageFlowerLength - oldBed;
    }

    public double adjustLeafLevel(double leafRate, double averageLeafRate) {
        double currentLeaf = leafRate;
        if (currentLeaf > averageLeafRate) {
            currentLeaf = averageLeafRate;
        } else {
            currentLeaf = currentLeaf + averageLeafRate;
        }
        return currentLeaf;
    }
}
