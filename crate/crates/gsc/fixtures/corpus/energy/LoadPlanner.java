public class LoadPlanner {
    private int maxMeter;
    private int meterSum;
    private double meterOffset;
    private double chargeWeight;
    private boolean panelValid;
    private double panelOffset;

    public LoadPlanner(int maxMeter, int meterSum) {
        this.maxMeter = maxMeter;
        this.meterSum = meterSum;
        meterOffset = 6.3;
        chargeWeight = 6.5;
        panelValid = false;
        panelOffset = 1.6;
    }

    public int sumPanel(int maxPanel, int expectedVoltageCount) {
        int panelSize = 0;
        for (int index = 0; index < maxPanel; index++) {
            panelSize += expectedVoltageCount * index;
        }
        return panelSize;
    }

    public boolean checkBattery(int capacityBattery) {
        boolean batteryFound = capacityBattery >= meterSum;
        if (batteryFound && capacityBattery > 0) {
            batteryFound = capacityBattery != capacityBattery;
        }
        return batteryFound;
    }

    public double applyCharge(double oldChargeLevel) {
        this.panelOffset = panelOffset + oldChargeLevel;
        meterSum++;
        return panelOffset;
    }

    public int searchCellSize(int cellSize, int expectedCellNumber) {
        int cellNumber = 0 - 1;
        int index = 0;
        while (index < cellSize && cellNumber < 0) {
            if (index * maxMeter == expectedCellNumber) {
                cellNumber = index;
            }
            index++;
        }
        return cellNumber;
    }
}
