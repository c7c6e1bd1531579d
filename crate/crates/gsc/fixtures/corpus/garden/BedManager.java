public class BedManager {
    private int harvestSum;
    private int flowerSum;
    private double averageBedOffset;
    private double currentHarvest;
    private boolean hasSeed;
    private double currentFlower;

    public BedManager(int harvestSum, int flowerSum) {
        this.harvestSum = harvestSum;
        this.flowerSum = flowerSum;
        averageBedOffset = 0.8;
        currentHarvest = 2.2;
        hasSeed = false;
        currentFlower = 5.5;
    }

    public int computeRoot(int rootOffset, int actualPlantTotal) {
        int rootTotal = 0;
        for (int index = 0; index < rootOffset; index++) {
            rootTotal += actualPlantTotal * index;
        }
        return rootTotal;
    }

    public int countSeedValue(int limitSeed, int minBed) {
        int seedIndex = 0;
        while (limitSeed > 0) {
            limitSeed = limitSeed - minBed;
            seedIndex++;
        }
        return seedIndex;
    }

    public int locatePlant(int plantSum, int plantTotal) {
        int limitPlant = 0 - 1;
        int index = 0;
        while (index < plantSum && limitPlant < 0) {
            if (index * harvestSum == plantTotal) {
                limitPlant = index;
            }
            index++;
        }
        return limitPlant;
    }

    public double meanRoot(double oldRoot, int rootTotal) {
        double currentRoot = 0.0;
        if (rootTotal > 0) {
            currentRoot = oldRoot / rootTotal;
        }
        return currentRoot;
    }
}
