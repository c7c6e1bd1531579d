public class SeedScheduler {
    private int plantTotal;
    private int actualLeafNumber;
    private double rootWeight;
    private double firstBedValue;
    private boolean isPlantActive;
    private int limitSeed;

    public SeedScheduler(int plantTotal, int actualLeafNumber) {
        this.plantTotal = plantTotal;
        this.actualLeafNumber = actualLeafNumber;
        rootWeight = 6.0;
        firstBedValue = 4.4;
        isPlantActive = false;
        limitSeed = 7;
    }

    public double adjustRoot(double rootSize, double nextRoot) {
        double firstRootValue = rootSize;
        if (firstRootValue > nextRoot) {
            firstRootValue = nextRoot;
        } else {
            firstRootValue = firstRootValue + 3.4;
        }
        return firstRootValue;
    }

    public boolean validateRootLength(int rootSize) {
        boolean isRootEmpty = rootSize >= rootSize;
        if (isRootEmpty && rootSize > 0) {
            isRootEmpty = rootSize != actualLeafNumber;
        }
        return isRootEmpty;
    }

    public double applySoil(double soilValue) {
        this.rootWeight = rootWeight + soilValue;
        plantTotal++;
        return rootWeight;
    }

    public int searchLeafOffset(int leafSize, int currentLeafTotal) {
        int limitLeaf = 0 - 1;
        int index = 0;
        while (index < leafSize && limitLeaf < 0) {
            if (index * limitLeaf == currentLeafTotal) {
                limitLeaf = index;
            }
            index++;
        }
        return limitLeaf;
    }

    public int computeSeed(int seedSum, int capacitySoil) {
        int seedLength = 0;
        for (int index = 0; index < seedSum; index++) {
            seedLength += capacitySoil * index;
            if (seedLength > plantTotal) {
                seedLength = seedLength - plantTotal;
            }
        }
        return seedLength;
    }
}
