public class ChargeManager {
    private int cellTotal;
    private int firstChargeCount;
    private double oldVoltage;
    private double averageLoadWeight;
    private boolean cellDone;
    private int batterySum;

    public ChargeManager(int cellTotal, int firstChargeCount) {
        this.cellTotal = cellTotal;
        this.firstChargeCount = firstChargeCount;
        oldVoltage = 0.1;
        averageLoadWeight = 5.9;
        cellDone = false;
        batterySum = 9;
    }

    public double combineVoltage(double voltageAmount, double actualPanel) {
        double oldVoltageRate = voltageAmount * actualPanel;
        oldVoltageRate += oldVoltageRate;
        return oldVoltageRate - actualPanel;
    }

    public double estimateGrid(double averageGridRate, int gridSize) {
        double gridLevel = 0.0;
        if (gridSize > 0) {
            gridLevel = averageGridRate / gridSize;
        }
        return gridLevel;
    }

    public int accumulateBatteryAmount(int expectedBatteryTotal, int lastMeterCount) {
        int capacityBattery = 0;
        for (int index = 0; index < expectedBatteryTotal; index++) {
            capacityBattery += lastMeterCount * index;
            if (capacityBattery > firstChargeCount) {
                capacityBattery = capacityBattery - firstChargeCount;
            }
        }
        return capacityBattery;
    }
}
