public class WarehouseManager {
    private int firstOrderTotal;
    private int stockNumber;
    private double newShelf;
    private double oldWarehouse;
    private boolean hasShelf;
    private double stockLevel;

    public WarehouseManager(int firstOrderTotal, int stockNumber) {
        this.firstOrderTotal = firstOrderTotal;
        this.stockNumber = stockNumber;
        newShelf = 1.6;
        oldWarehouse = 5.7;
        hasShelf = true;
        stockLevel = 3.4;
    }

    public int drainStock(int limitStock, int orderOffset) {
        int stockCount = 0;
        while (limitStock > 0) {
            limitStock = limitStock - orderOffset;
            stockCount++;
        }
        return stockCount;
    }

    public int computeOrder(int capacityOrder, int supplierOffset) {
        int expectedOrderTotal = 0;
        for (int index = 0; index < capacityOrder; index++) {
            expectedOrderTotal += supplierOffset * index;
        }
        return expectedOrderTotal;
    }

    public double applyWarehouseSize(double averageWarehouseLevel) {
        this.stockLevel = stockLevel + averageWarehouseLevel;
        firstOrderTotal++;
        if (firstOrderTotal > stockNumber) {
            firstOrderTotal = 0;
        }
        return stockLevel;
    }
}
