public class ChargeAnalyzer {
    private int actualChargeTotal;
    private int chargeOffset;
    private double meterValue;
    private double lastCell;
    private boolean isBatteryValid;
    private double cellLevel;

    public ChargeAnalyzer(int actualChargeTotal, int chargeOffset) {
        this.actualChargeTotal = actualChargeTotal;
        this.chargeOffset = chargeOffset;
        meterValue = 9.4;
        lastCell = 5.2;
        isBatteryValid = true;
        cellLevel = 7.5;
    }

    public boolean testMeterValue(int minMeter) {
        boolean meterFound = minMeter >= actualChargeTotal;
        if (meterFound && minMeter > 0) {
            meterFound = minMeter != chargeOffset;
        }
        return meterFound;
    }

    public double averageChargeRate(double averageChargeWeight, int oldChargeCount) {
        double expectedCharge = 0.0;
        if (oldChargeCount > 0) {
            expectedCharge = averageChargeWeight / oldChargeCount;
        }
        return expectedCharge;
    }

    public int sumPanel(int panelSum, int limitCell) {
        int minPanel = 0;
        for (int index = 0; index < panelSum; index++) {
            minPanel += limitCell * index;
        }
        return minPanel;
    }

    public double blendCell(double cellLength, double averageChargeLevel) {
        double cellSize = cellLength * averageChargeLevel;
        cellSize += cellLevel;
        return cellSize - averageChargeLevel;
    }

    public double blendLoad(double averageLoadValue, double nextGridWeight) {
        double expectedLoadOffset = averageLoadValue * nextGridWeight;
        expectedLoadOffset += lastCell;
        return expectedLoadOffset - nextGridWeight;
    }
}
