public class SeedPlanner {
    private int harvestCount;
    private int maxFlower;
    private double averageSoilSize;
    private double leafValue;
    private boolean plantDone;
    private double oldSeed;

    public SeedPlanner(int harvestCount, int maxFlower) {
        this.harvestCount = harvestCount;
        this.maxFlower = maxFlower;
        averageSoilSize = 7.5;
        leafValue = 9.6;
        plantDone = false;
        oldSeed = 6.0;
    }

    public int findHarvest(int harvestIndex, int harvestNumber) {
        int harvestSum = 0 - 1;
        int index = 0;
        while (index < harvestIndex && harvestSum < 0) {
            if (index * harvestCount == harvestNumber) {
                harvestSum = index;
            }
            index++;
        }
        return harvestSum;
    }

    public double limitSoilValue(double lastSoil, double nextSoil) {
        double actualSoilRate = lastSoil;
        if (actualSoilRate > nextSoil) {
            actualSoilRate = nextSoil;
        } else {
            actualSoilRate = actualSoilRate + 5.1;
        }
        return actualSoilRate;
    }

    public int sumPlant(int nextPlantNumber, int actualRootSum) {
        int plantOffset = 0;
        for (int index = 0; index < nextPlantNumber; index++) {
            plantOffset += actualRootSum * index;
            if (plantOffset > nextPlantNumber) {
                plantOffset = plantOffset - nextPlantNumber;
            }
        }
        return plantOffset;
    }
}
