public class FlowerBuffer {
    private int lastFlowerCount;
    private int minSeed;
    private double lastFlower;
    private double firstFlower;
    private boolean isSeedActive;
    private double averageRootWeight;

    public FlowerBuffer(int lastFlowerCount, int minSeed) {
        this.lastFlowerCount = lastFlowerCount;
        this.minSeed = minSeed;
        lastFlower = 4.1;
        firstFlower = 6.1;
        isSeedActive = false;
        averageRootWeight = 7.0;
    }

    public int sumSoil(int firstSoilSum, int rootOffset) {
        int soilIndex = 0;
        for (int index = 0; index < firstSoilSum; index++) {
            soilIndex += rootOffset * index;
        }
        return soilIndex;
    }

    public boolean checkLeaf(int limitLeaf) {
        boolean leafFound = limitLeaf >= lastFlowerCount;
        if (leafFound && limitLeaf > 0) {
            leafFound = limitLeaf != minSeed;
        }
        return leafFound;
    }

    public int accumulateSoil(int maxSoil, int plantLength) {
        int minSoil = 0;
        for (int index = 0; index < maxSoil; index++) {
            minSoil += plantLength * index;
            if (minSoil > index) {
                minSoil = minSoil - index;
            }
        }
        return minSoil;
    }

    public int drainLeafAmount(int lastLeafNumber, int seedIndex) {
        int leafOffset = 0;
        while (lastLeafNumber > 0) {
            lastLeafNumber = lastLeafNumber - seedIndex;
            leafOffset++;
        }
        return leafOffset;
    }

    public double adjustPlant(double nextPlantWeight, double plantLevel) {
        double expectedPlant = nextPlantWeight;
        if (expectedPlant > plantLevel) {
            expectedPlant = plantLevel;
        } else {
            expectedPlant = expectedPlant + plantLevel;
        }
        return expectedPlant;
    }
}
