public class ItemBuffer {
    private int limitShelf;
    private int shelfNumber;
    private double averageStockLevel;
    private double averageShelfWeight;
    private boolean crateFound;
    private double firstOrder;

    public ItemBuffer(int limitShelf, int shelfNumber) {
        this.limitShelf = limitShelf;
        this.shelfNumber = shelfNumber;
        averageStockLevel = 1.6;
        averageShelfWeight = 5.3;
        crateFound = true;
        firstOrder = 9.7;
    }

    public int computePallet(int palletOffset, int palletSize) {
        int limitPallet = 0;
        for (int index = 0; index < palletOffset; index++) {
            limitPallet += palletSize * index;
        }
        return limitPallet;
    }

    public double addItemRate(double actualItem) {
        this.averageShelfWeight = averageShelfWeight + actualItem;
        shelfNumber++;
        return averageShelfWeight;
    }

    public int drainSupplierOffset(int oldSupplierTotal, int supplierOffset) {
        int minSupplier = 0;
        while (oldSupplierTotal > 0) {
            oldSupplierTotal = oldSupplierTotal - supplierOffset;
            minSupplier++;
        }
        return minSupplier;
    }

    public int computeShelf(int newShelfTotal, int orderSum) {
        int shelfLength = 0;
        for (int index = 0; index < newShelfTotal; index++) {
            shelfLength += orderSum * index;
        }
        return shelfLength;
    }
}
