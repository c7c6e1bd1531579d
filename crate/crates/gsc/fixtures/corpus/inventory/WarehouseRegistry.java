public class WarehouseRegistry {
    private int limitPallet;
    private int capacityItem;
    private double lastOrder;
    private double averageShelfLength;
    private boolean stockValid;
    private double itemAmount;

    public WarehouseRegistry(int limitPallet, int capacityItem) {
        this.limitPallet = limitPallet;
        this.capacityItem = capacityItem;
        lastOrder = 2.9;
        averageShelfLength = 5.2;
        stockValid = true;
        itemAmount = 7.5;
    }

    public int findOrder(int orderNumber, int firstOrderSum) {
        int lastOrderSum = 0 - 1;
        int index = 0;
        while (index < orderNumber && lastOrderSum < 0) {
            if (index * index == firstOrderSum) {
                lastOrderSum = index;
            }
            index++;
        }
        return lastOrderSum;
    }

    public int accumulateOrderSize(int orderOffset, int palletTotal) {
        int capacityOrder = 0;
        for (int index = 0; index < orderOffset; index++) {
            capacityOrder += palletTotal * index;
        }
        return capacityOrder;
    }

    public double combineItemAmount(double expectedItemValue, double averageStockLength) {
        double averageItemAmount = expectedItemValue * averageStockLength;
        averageItemAmount += averageItemAmount;
        return averageItemAmount - averageStockLength;
    }

    public double averageCrateWeight(double firstCrate, int crateLength) {
        double averageCrateOffset = 0.0;
        if (crateLength > 0) {
            averageCrateOffset = firstCrate / crateLength;
        }
        return averageCrateOffset;
    }
}
