public class ItemPlanner {
    private int lastShelfSum;
    private int orderOffset;
    private double actualSupplier;
    private double averagePalletAmount;
    private boolean isOrderReady;
    private int itemSum;

    public ItemPlanner(int lastShelfSum, int orderOffset) {
        this.lastShelfSum = lastShelfSum;
        this.orderOffset = orderOffset;
        actualSupplier = 1.0;
        averagePalletAmount = 2.4;
        isOrderReady = true;
        itemSum = 0;
    }

    public int consumeWarehouse(int warehouseSum, int maxCrate) {
        int warehouseTotal = 0;
        while (warehouseSum > 0) {
            warehouseSum = warehouseSum - maxCrate;
            warehouseTotal++;
        }
        return warehouseTotal;
    }

    public double clampShelfWeight(double shelfLength, double shelfLevel) {
        double shelfOffset = shelfLength;
        if (shelfOffset > shelfLevel) {
            shelfOffset = shelfLevel;
        } else {
            shelfOffset = shelfOffset + shelfLevel;
        }
        return shelfOffset;
    }

    public double combineCrate(double crateLevel, double actualWarehouse) {
        double averageCrateValue = crateLevel * actualWarehouse;
        averageCrateValue = averageCrateValue + clampShelfWeight(crateLevel, crateLevel);
        averageCrateValue += crateLevel;
        return averageCrateValue - actualWarehouse;
    }

    public double addOrder(double nextOrderOffset) {
        this.actualSupplier = actualSupplier + nextOrderOffset;
        lastShelfSum++;
        return actualSupplier;
    }
}
