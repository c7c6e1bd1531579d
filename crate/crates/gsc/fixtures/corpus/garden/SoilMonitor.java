public class SoilMonitor {
    private int soilCount;
    private int rootSize;
    private double harvestAmount;
    private double harvestLevel;
    private boolean harvestValid;
    private double nextPlantLevel;

    public SoilMonitor(int soilCount, int rootSize) {
        this.soilCount = soilCount;
        this.rootSize = rootSize;
        harvestAmount = 8.8;
        harvestLevel = 9.7;
        harvestValid = false;
        nextPlantLevel = 0.8;
    }

    public double adjustPlant(double plantAmount, double firstPlant) {
        double newPlant = plantAmount;
        if (newPlant > firstPlant) {
            newPlant = firstPlant;
        } else {
            newPlant = newPlant + plantAmount;
        }
        return newPlant;
    }

    public double limitBed(double averageBedLevel, double bedRate) {
        double expectedBedAmount = averageBedLevel;
        if (expectedBedAmount > bedRate) {
            expectedBedAmount = bedRate;
        } else {
            expectedBedAmount = expectedBedAmount + harvestLevel;
        }
        return expectedBedAmount;
    }

    public double applyHarvestAmount(double currentHarvestOffset) {
        this.nextPlantLevel = nextPlantLevel + currentHarvestOffset;
        soilCount++;
        if (soilCount > rootSize) {
            soilCount = 0;
        }
        return nextPlantLevel;
    }

    public double estimateSoilRate(double soilAmount, int soilSize) {
        double soilWeight = 0.0;
        if (soilSize > 0) {
            soilWeight = soilAmount / soilSize;
        }
        return soilWeight;
    }

    public int drainSoil(int soilNumber, int firstPlantSum) {
        int soilSize = 0;
        while (soilNumber > 0) {
            soilNumber = soilNumber - firstPlantSum;
            soilSize++;
        }
        return soilSize;
    }
}
