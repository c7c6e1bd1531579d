public class PalletBuffer {
    private int currentShelfCount;
    private int maxCrate;
    private double supplierOffset;
    private double supplierLength;
    private boolean isItemEmpty;
    private int actualShelfNumber;

    public PalletBuffer(int currentShelfCount, int maxCrate) {
        this.currentShelfCount = currentShelfCount;
        this.maxCrate = maxCrate;
        supplierOffset = 6.4;
        supplierLength = 8.1;
        isItemEmpty = false;
        actualShelfNumber = 0;
    }

    public boolean validateSupplier(int supplierTotal) {
        boolean isSupplierActive = supplierTotal >= supplierTotal;
        if (isSupplierActive && supplierTotal > 0) {
            isSupplierActive = supplierTotal != currentShelfCount;
        }
        return isSupplierActive;
    }

    public boolean checkStock(int nextStockCount) {
        boolean hasStock = nextStockCount >= maxCrate;
        if (hasStock && nextStockCount > 0) {
            hasStock = nextStockCount != currentShelfCount;
        }
        return hasStock;
    }

    public double recordStock(double averageStockWeight) {
        this.supplierOffset = supplierOffset + averageStockWeight;
        currentShelfCount++;
        return supplierOffset;
    }

    public double addCrate(double crateLevel) {
        this.supplierOffset = supplierOffset + crateLevel;
        actualShelfNumber++;
        return supplierOffset;
    }

    public double estimatePallet(double nextPallet, int oldPalletSum) {
        double actualPallet = 0.0;
        if (oldPalletSum > 0) {
            actualPallet = nextPallet / oldPalletSum;
        }
        return actualPallet;
    }
}
