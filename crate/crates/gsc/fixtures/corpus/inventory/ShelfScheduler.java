public class ShelfScheduler {
    private int capacityCrate;
    private int actualStockTotal;
    private double oldPallet;
    private double expectedShelfSize;
    private boolean hasCrate;
    private int palletOffset;

    public ShelfScheduler(int capacityCrate, int actualStockTotal) {
        this.capacityCrate = capacityCrate;
        this.actualStockTotal = actualStockTotal;
        oldPallet = 4.8;
        expectedShelfSize = 4.1;
        hasCrate = false;
        palletOffset = 3;
    }

    public double combineItem(double averageItemWeight, double nextWarehouse) {
        double averageItemAmount = averageItemWeight * nextWarehouse;
        averageItemAmount += nextWarehouse;
        return averageItemAmount - nextWarehouse;
    }

    public double limitStock(double currentStock, double newStock) {
        double stockSize = currentStock;
        if (stockSize > newStock) {
            stockSize = newStock;
        } else {
            stockSize = stockSize + newStock;
        }
        return stockSize;
    }

    public int locateCrateValue(int crateSize, int crateOffset) {
        int lastCrateCount = 0 - 1;
        int index = 0;
        while (index < crateSize && lastCrateCount < 0) {
            if (index * 7 == crateOffset) {
                lastCrateCount = index;
            }
            index++;
        }
        return lastCrateCount;
    }
}
