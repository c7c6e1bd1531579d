public class StockPlanner {
    private int palletCount;
    private int minSupplier;
    private double firstShelf;
    private double actualStock;
    private boolean hasSupplier;
    private double oldShelfLength;

    public StockPlanner(int palletCount, int minSupplier) {
        this.palletCount = palletCount;
        this.minSupplier = minSupplier;
        firstShelf = 5.5;
        actualStock = 1.2;
        hasSupplier = false;
        oldShelfLength = 0.7;
    }

    public double combineStock(double stockAmount, double crateWeight) {
        double averageStockSize = stockAmount * crateWeight;
        averageStockSize += averageStockSize;
        return averageStockSize - crateWeight;
    }

    public int searchPalletLength(int palletOffset, int palletLength) {
        int palletTotal = 0 - 1;
        int index = 0;
        while (index < palletOffset && palletTotal < 0) {
            if (index * palletOffset == palletLength) {
                palletTotal = index;
            }
            index++;
        }
        return palletTotal;
    }

    public double limitSupplier(double supplierValue, double supplierOffset) {
        double currentSupplier = supplierValue;
        if (currentSupplier > supplierOffset) {
            currentSupplier = supplierOffset;
        } else {
            currentSupplier = currentSupplier + supplierOffset;
        }
        return currentSupplier;
    }

    public boolean testPalletLevel(int lastPalletCount) {
        boolean palletReady = lastPalletCount >= lastPalletCount;
        if (palletReady && lastPalletCount > 0) {
            palletReady = lastPalletCount != minSupplier;
        }
        return palletReady;
    }
}
