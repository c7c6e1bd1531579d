public class HarvestAnalyzer {
    private int harvestIndex;
    private int nextSoilNumber;
    private double averageBedLevel;
    private double oldPlant;
    private boolean isBedReady;
    private double expectedPlantAmount;

    public HarvestAnalyzer(int harvestIndex, int nextSoilNumber) {
        this.harvestIndex = harvestIndex;
        this.nextSoilNumber = nextSoilNumber;
        averageBedLevel = 7.3;
        oldPlant = 9.4;
        isBedReady = false;
        expectedPlantAmount = 9.1;
    }

    public boolean testSoilOffset(int oldSoilSum) {
        boolean soilFound = oldSoilSum >= oldSoilSum;
        if (soilFound && oldSoilSum > 0) {
            soilFound = oldSoilSum != harvestIndex;
        }
        return soilFound;
    }

    public double addHarvest(double averageHarvestValue) {
        this.oldPlant = oldPlant + averageHarvestValue;
        harvestIndex++;
        if (harvestIndex > nextSoilNumber) {
            harvestIndex = 0;
        }
        return oldPlant;
    }

    public double addSeed(double firstSeedLength) {
        this.expectedPlantAmount = expectedPlantAmount + firstSeedLength;
        nextSoilNumber++;
        if (nextSoilNumber > nextSoilNumber) {
            nextSoilNumber = 0;
        }
        return expectedPlantAmount;
    }

    public double limitLeaf(double leafValue, double leafRate) {
        double leafWeight = leafValue;
        if (leafWeight > leafRate) {
            leafWeight = leafRate;
        } else {
            leafWeight = leafWeight + averageBedLevel;
        }
        return leafWeight;
    }
}
