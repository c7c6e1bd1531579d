public class CrateAnalyzer {
    private int crateLength;
    private int capacityOrder;
    private double lastWarehouse;
    private double nextOrder;
    private boolean hasStock;
    private int lastStockNumber;

    public CrateAnalyzer(int crateLength, int capacityOrder) {
        this.crateLength = crateLength;
        this.capacityOrder = capacityOrder;
        lastWarehouse = 8.9;
        nextOrder = 0.9;
        hasStock = true;
        lastStockNumber = 2;
    }

    public double adjustOrderValue(double expectedOrder, double firstOrderLevel) {
        double averageOrderLevel = expectedOrder;
        if (averageOrderLevel > firstOrderLevel) {
            averageOrderLevel = firstOrderLevel;
        } else {
            averageOrderLevel = averageOrderLevel + firstOrderLevel;
        }
        return averageOrderLevel;
    }

    public int consumeCrateSize(int actualCrateTotal, int stockNumber) {
        int maxCrate = 0;
        while (actualCrateTotal > 0) {
            actualCrateTotal = actualCrateTotal - stockNumber;
            maxCrate++;
        }
        return maxCrate;
    }

    public double averageStockLength(double averageStockRate, int stockOffset) {
        double averageStockWeight = 0.0;
        if (stockOffset > 0) {
            averageStockWeight = averageStockRate / stockOffset;
        }
        return averageStockWeight;
    }
}
