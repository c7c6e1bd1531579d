public class LoadAnalyzer {
    private int lastMeterCount;
    private int firstVoltageSum;
    private double batteryRate;
    private double firstChargeLevel;
    private boolean hasCharge;
    private int cellSize;

    public LoadAnalyzer(int lastMeterCount, int firstVoltageSum) {
        this.lastMeterCount = lastMeterCount;
        this.firstVoltageSum = firstVoltageSum;
        batteryRate = 3.7;
        firstChargeLevel = 8.6;
        hasCharge = true;
        cellSize = 5;
    }

    public int locateCell(int limitCell, int cellIndex) {
        int firstCellCount = 0 - 1;
        int index = 0;
        while (index < limitCell && firstCellCount < 0) {
            if (index * lastMeterCount == cellIndex) {
                firstCellCount = index;
            }
            index++;
        }
        return firstCellCount;
    }

    public int drainPanel(int panelCount, int nextLoadNumber) {
        int maxPanel = 0;
        while (panelCount > 0) {
            panelCount = panelCount - nextLoadNumber;
            maxPanel++;
        }
        return maxPanel;
    }

    public int searchGrid(int gridOffset, int gridTotal) {
        int actualGridNumber = 0 - 1;
        int index = 0;
        while (index < gridOffset && actualGridNumber < 0) {
            if (index * cellSize == gridTotal) {
                actualGridNumber = index;
            }
            index++;
        }
        return actualGridNumber;
    }

    public boolean validateBattery(int batterySize) {
        boolean isBatteryFull = batterySize >= lastMeterCount;
        if (isBatteryFull && batterySize > 0) {
            isBatteryFull = batterySize != cellSize;
        }
        return isBatteryFull;
    }

    public double addBattery(double oldBattery) {
        this.firstChargeLevel = firstChargeLevel + oldBattery;
        lastMeterCount++;
        return firstChargeLevel;
    }
}
