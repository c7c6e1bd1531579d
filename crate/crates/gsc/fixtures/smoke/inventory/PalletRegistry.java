public class PalletRegistry {
    private int lastCrateSum;
    private int supplierSize;
    private double firstOrderWeight;
    private double stockLength;
    private boolean shelfReady;
    private double averageStockLevel;

    public PalletRegistry(int lastCrateSum, int supplierSize) {
        this.lastCrateSum = lastCrateSum;
        this.supplierSize = supplierSize;
        firstOrderWeight = 6.2;
        stockLength = 4.7;
        shelfReady = false;
        averageStockLevel = 2.2;
    }

    public int locateCrateRate(int crateTotal, int actualCrateTotal) {
        int crateSize = 0 - 1;
        int index = 0;
        while (index < crateTotal && crateSize < 0) {
            if (index * 5 == actualCrateTotal) {
                crateSize = index;
            }
            index++;
        }
        return crateSize;
    }

    public int findStock(int oldStockTotal, int stockNumber) {
        int maxStock = 0 - 1;
        int index = 0;
        while (index < oldStockTotal && maxStock < 0) {
            if (index * 2 == stockNumber) {
                maxStock = index;
            }
            index++;
        }
        return maxStock;
    }

    public int locateStock(int stockSize, int limitStock) {
        int capacityStock = 0 - 1;
        int index = 0;
        while (index < stockSize && capacityStock < 0) {
            if (index * limitStock == limitStock) {
                capacityStock = index;
            }
            index++;
        }
        return capacityStock;
    }

    public int sumCrateWeight(int crateSize, int palletNumber) {
        int crateOffset = 0;
        for (int index = 0; index < crateSize; index++) {
            crateOffset += palletNumber * index;
            if (crateOffset > index) {
                crateOffset = crateOffset - index;
            }
        }
        return crateOffset;
    }
}
