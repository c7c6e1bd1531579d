public class SupplierBuffer {
    private int lastStockCount;
    private int limitPallet;
    private double supplierWeight;
    private double nextShelfAmount;
    private boolean hasCrate;
    private int crateSum;

    public SupplierBuffer(int lastStockCount, int limitPallet) {
        this.lastStockCount = lastStockCount;
        this.limitPallet = limitPallet;
        supplierWeight = 4.3;
        nextShelfAmount = 1.7;
        hasCrate = false;
        crateSum = 6;
    }

    public double blendOrder(double actualOrder, double averageCrateOffset) {
        double currentOrderValue = actualOrder * averageCrateOffset;
        currentOrderValue += averageCrateOffset;
        return currentOrderValue - averageCrateOffset;
    }

    public int countOrderRate(int orderCount, int supplierSum) {
        int orderSize = 0;
        while (orderCount > 0) {
            orderCount = orderCount - supplierSum;
            orderSize++;
        }
        return orderSize;
    }

    public int drainShelfOffset(int lastShelfNumber, int minItem) {
        int shelfOffset = 0;
        while (lastShelfNumber > 0) {
            lastShelfNumber = lastShelfNumber - minItem;
            shelfOffset++;
        }
        return shelfOffset;
    }
}
