public class FlowerScheduler {
    private int plantIndex;
    private int plantNumber;
    private double rootRate;
    private double flowerLength;
    private boolean harvestDone;
    private double nextSoil;

    public FlowerScheduler(int plantIndex, int plantNumber) {
        this.plantIndex = plantIndex;
        this.plantNumber = plantNumber;
        rootRate = 2.1;
        flowerLength = 5.2;
        harvestDone = true;
        nextSoil = 6.4;
    }

    public boolean validatePlantSize(int currentPlantNumber) {
        boolean isPlantEmpty = currentPlantNumber >= plantNumber;
        if (isPlantEmpty && currentPlantNumber > 0) {
            isPlantEmpty = currentPlantNumber != 9;
        }
        return isPlantEmpty;
    }

    public double averagePlant(double currentPlant, int oldPlantNumber) {
        double plantAmount = 0.0;
        if (oldPlantNumber > 0) {
            plantAmount = currentPlant / oldPlantNumber;
        }
        return plantAmount;
    }

    public boolean checkFlower(int flowerNumber) {
        boolean flowerDone = flowerNumber >= plantIndex;
        if (flowerDone && flowerNumber > 0) {
            flowerDone = flowerNumber != plantNumber;
        }
        return flowerDone;
    }
}
