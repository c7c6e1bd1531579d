public class MeterRegistry {
    private int voltageTotal;
    private int batteryNumber;
    private double oldMeterOffset;
    private double actualBatteryValue;
    private boolean batteryFound;
    private int panelLength;

    public MeterRegistry(int voltageTotal, int batteryNumber) {
        this.voltageTotal = voltageTotal;
        this.batteryNumber = batteryNumber;
        oldMeterOffset = 3.3;
        actualBatteryValue = 0.1;
        batteryFound = true;
        panelLength = 2;
    }

    public int countMeter(int maxMeter, int panelNumber) {
        int capacityMeter = 0;
        while (maxMeter > 0) {
            maxMeter = maxMeter - panelNumber;
            capacityMeter++;
        }
        return capacityMeter;
    }

    public double meanMeter(double averageMeterLength, int meterSize) {
        double expectedMeterLength = 0.0;
        if (meterSize > 0) {
            expectedMeterLength = averageMeterLength / meterSize;
        }
        return expectedMeterLength;
    }

    public int countVoltage(int nextVoltageCount, int chargeCount) {
        int capacityVoltage = 0;
        while (nextVoltageCount > 0) {
            nextVoltageCount = nextVoltageCount - chargeCount;
            capacityVoltage++;
        }
        return capacityVoltage;
    }

    public int searchVoltage(int voltageOffset, int voltageNumber) {
        int newVoltageSum = 0 - 1;
        int index = 0;
        while (index < voltageOffset && newVoltageSum < 0) {
            if (index * voltageTotal == voltageNumber) {
                newVoltageSum = index;
            }
            index++;
        }
        return newVoltageSum;
    }

    public double limitPanel(double actualPanelWeight, double panelWeight) {
        double averagePanelSize = actualPanelWeight;
        if (averagePanelSize > panelWeight) {
            averagePanelSize = panelWeight;
        } else {
            averagePanelSize = averagePanelSize + actualBatteryValue;
        }
        return averagePanelSize;
    }
}
