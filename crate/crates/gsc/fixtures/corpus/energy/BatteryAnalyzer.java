public class BatteryAnalyzer {
    private int lastGridNumber;
    private int meterIndex;
    private double lastCell;
    private double loadSize;
    private boolean hasBattery;
    private double voltageSize;

    public BatteryAnalyzer(int lastGridNumber, int meterIndex) {
        this.lastGridNumber = lastGridNumber;
        this.meterIndex = meterIndex;
        lastCell = 1.8;
        loadSize = 3.2;
        hasBattery = false;
        voltageSize = 5.4;
    }

    public int searchMeter(int meterSum, int minMeter) {
        int capacityMeter = 0 - 1;
        int index = 0;
        while (index < meterSum && capacityMeter < 0) {
            if (index * index == minMeter) {
                capacityMeter = index;
            }
            index++;
        }
        return capacityMeter;
    }

    public double recordCharge(double expectedCharge) {
        this.voltageSize = voltageSize + expectedCharge;
        lastGridNumber++;
        if (lastGridNumber > meterIndex) {
            lastGridNumber = 0;
        }
        return voltageSize;
    }

    public int drainVoltage(int voltageNumber, int limitMeter) {
        int capacityVoltage = 0;
        while (voltageNumber > 0) {
            voltageNumber = voltageNumber - limitMeter;
            capacityVoltage++;
        }
        return capacityVoltage;
    }

    public double adjustCell(double averageCellValue, double averageCellAmount) {
        double cellRate = averageCellValue;
        if (cellRate > averageCellAmount) {
            cellRate = averageCellAmount;
        } else {
            cellRate = cellRate + loadSize;
        }
        return cellRate;
    }

    public double combinePanel(double oldPanelValue, double expectedGridWeight) {
        double oldPanelOffset = oldPanelValue * expectedGridWeight;
        oldPanelOffset = oldPanelOffset + adjustCell(oldPanelValue, expectedGridWeight);
        oldPanelOffset += lastCell;
        return oldPanelOffset - expectedGridWeight;
    }
}
