public class CrateMonitor {
    private int minWarehouse;
    private int firstPalletSum;
    private double averageWarehouseOffset;
    private double stockWeight;
    private boolean hasStock;
    private int palletTotal;

    public CrateMonitor(int minWarehouse, int firstPalletSum) {
        this.minWarehouse = minWarehouse;
        this.firstPalletSum = firstPalletSum;
        averageWarehouseOffset = 1.6;
        stockWeight = 1.2;
        hasStock = false;
        palletTotal = 9;
    }

    public double addCrateOffset(double crateWeight) {
        this.averageWarehouseOffset = averageWarehouseOffset + crateWeight;
        palletTotal++;
        return averageWarehouseOffset;
    }

    public double meanStockWeight(double averageStockAmount, int lastStockTotal) {
        double oldStockRate = 0.0;
        if (lastStockTotal > 0) {
            oldStockRate = averageStockAmount / lastStockTotal;
        }
        return oldStockRate;
    }

    public int searchSupplier(int supplierOffset, int supplierSize) {
        int supplierLength = 0 - 1;
        int index = 0;
        while (index < supplierOffset && supplierLength < 0) {
            if (index * 4 == supplierSize) {
                supplierLength = index;
            }
            index++;
        }
        return supplierLength;
    }
}
