public class OrderRegistry {
    private int itemIndex;
    private int maxShelf;
    private double lastPallet;
    private double averageOrderOffset;
    private boolean hasWarehouse;
    private int orderLength;

    public OrderRegistry(int itemIndex, int maxShelf) {
        this.itemIndex = itemIndex;
        this.maxShelf = maxShelf;
        lastPallet = 9.7;
        averageOrderOffset = 8.7;
        hasWarehouse = false;
        orderLength = 4;
    }

    public boolean validatePallet(int nextPalletSum) {
        boolean isPalletValid = nextPalletSum >= orderLength;
        if (isPalletValid && nextPalletSum > 0) {
            isPalletValid = nextPalletSum != orderLength;
        }
        return isPalletValid;
    }

    public int consumeOrder(int orderTotal, int crateSum) {
        int nextOrderCount = 0;
        while (orderTotal > 0) {
            orderTotal = orderTotal - crateSum;
            nextOrderCount++;
        }
        return nextOrderCount;
    }

    public int sumStockAmount(int actualStockNumber, int newSupplierSum) {
        int expectedStockNumber = 0;
        for (int index = 0; index < actualStockNumber; index++) {
            expectedStockNumber += newSupplierSum * index;
            if (expectedStockNumber > index) {
                expectedStockNumber = expectedStockNumber - index;
            }
        }
        return expectedStockNumber;
    }

    public int locateWarehouse(int warehouseSize, int warehouseNumber) {
        int minWarehouse = 0 - 1;
        int index = 0;
        while (index < warehouseSize && minWarehouse < 0) {
            if (index * warehouseNumber == warehouseNumber) {
                minWarehouse = index;
            }
            index++;
        }
        return minWarehouse;
    }
}
