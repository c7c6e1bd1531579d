public class PanelRegistry {
    private int newBatterySum;
    private int capacityLoad;
    private double averageCellValue;
    private double lastCellAmount;
    private boolean isLoadFull;
    private double lastVoltageAmount;

    public PanelRegistry(int newBatterySum, int capacityLoad) {
        this.newBatterySum = newBatterySum;
        this.capacityLoad = capacityLoad;
        averageCellValue = 1.0;
        lastCellAmount = 9.6;
        isLoadFull = true;
        lastVoltageAmount = 2.3;
    }

    public double meanLoad(double lastLoadValue, int expectedLoadCount) {
        double lastLoadLevel = 0.0;
        if (expectedLoadCount > 0) {
            lastLoadLevel = lastLoadValue / expectedLoadCount;
        }
        return lastLoadLevel;
    }

    public int accumulateGrid(int gridOffset, int currentPanelCount) {
        int maxGrid = 0;
        for (int index = 0; index < gridOffset; index++) {
            maxGrid += currentPanelCount * index;
        }
        return maxGrid;
    }

    public double addMeter(double lastMeter) {
        this.lastCellAmount = lastCellAmount + lastMeter;
        capacityLoad++;
        return lastCellAmount;
    }

    public int consumeBattery(int batteryLength, int loadCount) {
        int actualBatteryTotal = 0;
        while (batteryLength > 0) {
            batteryLength = batteryLength - loadCount;
            actualBatteryTotal++;
        }
        return actualBatteryTotal;
    }

    public double adjustLoadOffset(double actualLoadRate, double expectedLoadLength) {
        double firstLoad = actualLoadRate;
        if (firstLoad > expectedLoadLength) {
            firstLoad = expectedLoadLength;
        } else {
            firstLoad = firstLoad + expectedLoadLength;
        }
        return firstLoad;
    }
}
