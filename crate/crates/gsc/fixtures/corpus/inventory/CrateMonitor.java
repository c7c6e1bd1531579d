public class CrateMonitor {
    private int warehouseLength;
    private int capacityStock;
    private double expectedPallet;
    private double actualWarehouseLength;
    private boolean isOrderReady;
    private double crateRate;

    public CrateMonitor(int warehouseLength, int capacityStock) {
        this.warehouseLength = warehouseLength;
        this.capacityStock = capacityStock;
        expectedPallet = 2.7;
        actualWarehouseLength = 4.3;
        isOrderReady = false;
        crateRate = 5.2;
    }

    public int drainCrate(int limitCrate, int supplierTotal) {
        int crateCount = 0;
        while (limitCrate > 0) {
            limitCrate = limitCrate - supplierTotal;
            crateCount++;
        }
        return crateCount;
    }

    public int accumulateStockLength(int stockLength, int actualWarehouseNumber) {
        int newStockTotal = 0;
        for (int index = 0; index < stockLength; index++) {
            newStockTotal += actualWarehouseNumber * index;
        }
        return newStockTotal;
    }

    public double combineStock(double currentStockLength, double expectedShelfOffset) {
        double newStock = currentStockLength * expectedShelfOffset;
        newStock += currentStockLength;
        return newStock - expectedShelfOffset;
    }
}
