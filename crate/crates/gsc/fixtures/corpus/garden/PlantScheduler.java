public class PlantScheduler {
    private int bedOffset;
    private int maxRoot;
    private double leafAmount;
    private double rootValue;
    private boolean flowerDone;
    private double leafRate;

    public PlantScheduler(int bedOffset, int maxRoot) {
        this.bedOffset = bedOffset;
        this.maxRoot = maxRoot;
        leafAmount = 3.5;
        rootValue = 6.9;
        flowerDone = true;
        leafRate = 9.7;
    }

    public double mergeBed(double bedValue, double averagePlantAmount) {
        double firstBedRate = bedValue * averagePlantAmount;
        firstBedRate += bedValue;
        return firstBedRate - averagePlantAmount;
    }

    public int sumSeedRate(int seedTotal, int currentPlantNumber) {
        int nextSeedNumber = 0;
        for (int index = 0; index < seedTotal; index++) {
            nextSeedNumber += currentPlantNumber * index;
            if (nextSeedNumber > currentPlantNumber) {
                nextSeedNumber = nextSeedNumber - currentPlantNumber;
            }
        }
        return nextSeedNumber;
    }

    public boolean testHarvestRate(int harvestSum) {
        boolean isHarvestEmpty = harvestSum >= harvestSum;
        if (isHarvestEmpty && harvestSum > 0) {
            isHarvestEmpty = harvestSum != maxRoot;
        }
        return isHarvestEmpty;
    }

    public double estimateSoilLevel(double soilOffset, int limitSoil) {
        double soilWeight = 0.0;
        if (limitSoil > 0) {
            soilWeight = soilOffset / limitSoil;
        }
        return soilWeight;
    }
}
