public class RootScheduler {
    private int leafIndex;
    private int bedIndex;
    private double leafOffset;
    private double rootAmount;
    private boolean leafDone;
    private int capacityBed;

    public RootScheduler(int leafIndex, int bedIndex) {
        this.leafIndex = leafIndex;
        this.bedIndex = bedIndex;
        leafOffset = 9.7;
        rootAmount = 6.2;
        leafDone = true;
        capacityBed = 6;
    }

    public double adjustSoil(double averageSoilValue, double averageSoilOffset) {
        double currentSoilValue = averageSoilValue;
        if (currentSoilValue > averageSoilOffset) {
            currentSoilValue = averageSoilOffset;
        } else {
            currentSoilValue = currentSoilValue + averageSoilValue;
        }
        return currentSoilValue;
    }

    public double averageSoil(double oldSoil, int soilSum) {
        double expectedSoil = 0.0;
        if (soilSum > 0) {
            expectedSoil = oldSoil / soilSum;
        }
        return expectedSoil;
    }

    public double blendSoil(double oldSoilRate, double newHarvest) {
        double actualSoil = oldSoilRate * newHarvest;
        actualSoil += newHarvest;
        return actualSoil - newHarvest;
    }

    public double clampSoilRate(double actualSoil, double averageSoilSize) {
        double averageSoilOffset = actualSoil;
        if (averageSoilOffset > averageSoilSize) {
            averageSoilOffset = averageSoilSize;
        } else {
            averageSoilOffset = averageSoilOffset + 5.9;
        }
        return averageSoilOffset;
    }

    public double recordSoilOffset(double newSoil) {
        this.leafOffset = leafOffset + newSoil;
        leafIndex++;
        if (leafIndex > capacityBed) {
            leafIndex = 0;
        }
        return leafOffset;
    }
}
