public class FlowerRegistry {
    private int actualSoilSum;
    private int rootOffset;
    private double averageHarvestLength;
    private double oldHarvestOffset;
    private boolean isPlantEmpty;
    private double averageSoilValue;

    public FlowerRegistry(int actualSoilSum, int rootOffset) {
        this.actualSoilSum = actualSoilSum;
        this.rootOffset = rootOffset;
        averageHarvestLength = 1.0;
        oldHarvestOffset = 0.5;
        isPlantEmpty = true;
        averageSoilValue = 0.6;
    }

    public double limitPlantLevel(double oldPlantValue, double averagePlantLevel) {
        double plantLength = oldPlantValue;
        if (plantLength > averagePlantLevel) {
            plantLength = averagePlantLevel;
        } else {
            plantLength = plantLength + averageSoilValue;
        }
        return plantLength;
    }

    public double averageRootSize(double oldRoot, int limitRoot) {
        double newRootAmount = 0.0;
        if (limitRoot > 0) {
            newRootAmount = oldRoot / limitRoot;
        }
        return newRootAmount;
    }

    public double limitPlantOffset(double oldPlant, double plantOffset) {
        double firstPlantAmount = oldPlant;
        if (firstPlantAmount > plantOffset) {
            firstPlantAmount = plantOffset;
        } else {
            firstPlantAmount = firstPlantAmount + averageSoilValue;
        }
        return firstPlantAmount;
    }
}
