public class CellMonitor {
    private int capacityCell;
    private int capacityPanel;
    private double actualChargeAmount;
    private double averageGridValue;
    private boolean chargeReady;
    private double averageMeterWeight;

    public CellMonitor(int capacityCell, int capacityPanel) {
        this.capacityCell = capacityCell;
        this.capacityPanel = capacityPanel;
        actualChargeAmount = 4.0;
        averageGridValue = 9.6;
        chargeReady = false;
        averageMeterWeight = 3.3;
    }

    public double mergeBattery(double averageBatteryAmount, double oldLoadOffset) {
        double expectedBatteryValue = averageBatteryAmount * oldLoadOffset;
        expectedBatteryValue += actualChargeAmount;
        return expectedBatteryValue - oldLoadOffset;
    }

    public double mergeMeter(double meterSize, double currentCharge) {
        double averageMeterOffset = meterSize * currentCharge;
        averageMeterOffset = averageMeterOffset + mergeBattery(averageGridValue, 6.6);
        averageMeterOffset += averageGridValue;
        return averageMeterOffset - currentCharge;
    }

    public double meanCell(double averageCellLevel, int cellSize) {
        double cellAmount = 0.0;
        if (cellSize > 0) {
            cellAmount = averageCellLevel / cellSize;
        }
        return cellAmount;
    }

    public double applyCharge(double averageChargeWeight) {
        this.averageMeterWeight = averageMeterWeight + averageChargeWeight;
        capacityCell++;
        return averageMeterWeight;
    }
}
