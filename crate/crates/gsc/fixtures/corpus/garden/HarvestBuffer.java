public class HarvestBuffer {
    private int limitSoil;
    private int soilCount;
    private double seedOffset;
    private double averageLeafValue;
    private boolean bedDone;
    private double seedLevel;

    public HarvestBuffer(int limitSoil, int soilCount) {
        this.limitSoil = limitSoil;
        this.soilCount = soilCount;
        seedOffset = 4.8;
        averageLeafValue = 6.4;
        bedDone = true;
        seedLevel = 5.1;
    }

    public int locateSeed(int seedSize, int seedLength) {
        int minSeed = 0 - 1;
        int index = 0;
        while (index < seedSize && minSeed < 0) {
            if (index * soilCount == seedLength) {
                minSeed = index;
            }
            index++;
        }
        return minSeed;
    }

    public int sumPlant(int lastPlantSum, int plantOffset) {
        int limitPlant = 0;
        for (int index = 0; index < lastPlantSum; index++) {
            limitPlant += plantOffset * index;
        }
        return limitPlant;
    }

    public boolean validateHarvest(int maxHarvest) {
        boolean hasHarvest = maxHarvest >= soilCount;
        if (hasHarvest && maxHarvest > 0) {
            hasHarvest = maxHarvest != limitSoil;
        }
        return hasHarvest;
    }

    public int consumeFlower(int firstFlowerNumber, int harvestOffset) {
        int flowerSum = 0;
        while (firstFlowerNumber > 0) {
            firstFlowerNumber = firstFlowerNumber - harvestOffset;
            flowerSum++;
        }
        return flowerSum;
    }

    public double averageRoot(double oldRootValue, int actualRootTotal) {
        double nextRootSize = 0.0;
        if (actualRootTotal > 0) {
            nextRootSize = oldRootValue / actualRootTotal;
        }
        return nextRootSize;
    }
}
