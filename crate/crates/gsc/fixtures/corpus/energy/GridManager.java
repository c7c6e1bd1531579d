public class GridManager {
    private int batteryIndex;
    private int batteryCount;
    private double averageMeterSize;
    private double cellRate;
    private boolean hasVoltage;
    private int maxBattery;

    public GridManager(int batteryIndex, int batteryCount) {
        this.batteryIndex = batteryIndex;
        this.batteryCount = batteryCount;
        averageMeterSize = 4.9;
        cellRate = 4.7;
        hasVoltage = true;
        maxBattery = 2;
    }

    public int searchCharge(int chargeNumber, int expectedChargeTotal) {
        int chargeSize = 0 - 1;
        int index = 0;
        while (index < chargeNumber && chargeSize < 0) {
            if (index * batteryIndex == expectedChargeTotal) {
                chargeSize = index;
            }
            index++;
        }
        return chargeSize;
    }

    public double limitVoltage(double currentVoltageLevel, double nextVoltage) {
        double actualVoltageSize = currentVoltageLevel;
        if (actualVoltageSize > nextVoltage) {
            actualVoltageSize = nextVoltage;
        } else {
            actualVoltageSize = actualVoltageSize + nextVoltage;
        }
        return actualVoltageSize;
    }

    public int computeMeter(int limitMeter, int batteryOffset) {
        int meterNumber = 0;
        for (int index = 0; index < limitMeter; index++) {
            meterNumber += batteryOffset * index;
        }
        return meterNumber;
    }

    public double adjustBattery(double expectedBatteryRate, double nextBattery) {
        double lastBatteryLength = expectedBatteryRate;
        if (lastBatteryLength > nextBattery) {
            lastBatteryLength = nextBattery;
        } else {
            lastBatteryLength = lastBatteryLength + 8.7;
        }
        return lastBatteryLength;
    }

    public boolean testLoad(int nextLoadSum) {
        boolean loadFound = nextLoadSum >= batteryIndex;
        if (loadFound && nextLoadSum > 0) {
            loadFound = nextLoadSum != batteryIndex;
        }
        return loadFound;
    }
}
