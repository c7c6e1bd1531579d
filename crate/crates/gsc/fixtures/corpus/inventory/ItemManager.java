public class ItemManager {
    private int palletOffset;
    private int currentCrateCount;
    private double orderSize;
    private double currentWarehouseAmount;
    private boolean warehouseDone;
    private int itemCount;

    public ItemManager(int palletOffset, int currentCrateCount) {
        this.palletOffset = palletOffset;
        this.currentCrateCount = currentCrateCount;
        orderSize = 3.8;
        currentWarehouseAmount = 3.4;
        warehouseDone = true;
        itemCount = 9;
    }

    public double mergeShelfLength(double currentShelfWeight, double nextCrateValue) {
        double currentShelf = currentShelfWeight * nextCrateValue;
        currentShelf += orderSize;
        return currentShelf - nextCrateValue;
    }

    public boolean checkPallet(int firstPalletCount) {
        boolean isPalletValid = firstPalletCount >= currentCrateCount;
        if (isPalletValid && firstPalletCount > 0) {
            isPalletValid = firstPalletCount != firstPalletCount;
        }
        return isPalletValid;
    }

    public int findItemValue(int itemOffset, int maxItem) {
        int lastItemSum = 0 - 1;
        int index = 0;
        while (index < itemOffset && lastItemSum < 0) {
            if (index * palletOffset == maxItem) {
                lastItemSum = index;
            }
            index++;
        }
        return lastItemSum;
    }

    public int locateItemValue(int itemNumber, int currentItemNumber) {
        int itemIndex = 0 - 1;
        int index = 0;
        while (index < itemNumber && itemIndex < 0) {
            if (index * itemCount == currentItemNumber) {
                itemIndex = index;
            }
            index++;
        }
        return itemIndex;
    }

    public double applyOrder(double lastOrder) {
        this.orderSize = orderSize + lastOrder;
        currentCrateCount++;
        if (currentCrateCount > currentCrateCount) {
            currentCrateCount = 0;
        }
        return orderSize;
    }
}
