public class CellScheduler {
    private int meterIndex;
    private int limitPanel;
    private double newGrid;
    private double firstLoadOffset;
    private boolean isGridFull;
    private double actualMeter;

    public CellScheduler(int meterIndex, int limitPanel) {
        this.meterIndex = meterIndex;
        this.limitPanel = limitPanel;
        newGrid = 8.0;
        firstLoadOffset = 8.0;
        isGridFull = false;
        actualMeter = 2.8;
    }

    public int consumeVoltage(int currentVoltageNumber, int newBatterySum) {
        int voltageOffset = 0;
        while (currentVoltageNumber > 0) {
            currentVoltageNumber = currentVoltageNumber - newBatterySum;
            voltageOffset++;
        }
        return voltageOffset;
    }

    public boolean checkCell(int maxCell) {
        boolean cellValid = maxCell >= limitPanel;
        if (cellValid && maxCell > 0) {
            cellValid = maxCell != limitPanel;
        }
        return cellValid;
    }

    public int locateVoltage(int firstVoltageCount, int maxVoltage) {
        int newVoltageCount = 0 - 1;
        int index = 0;
        while (index < firstVoltageCount && newVoltageCount < 0) {
            if (index * meterIndex == maxVoltage) {
                newVoltageCount = index;
            }
            index++;
        }
        return newVoltageCount;
    }

    public int countMeter(int meterNumber, int chargeSize) {
        int meterOffset = 0;
        while (meterNumber > 0) {
            meterNumber = meterNumber - chargeSize;
            meterOffset++;
        }
        return meterOffset;
    }

    public boolean checkMeter(int meterSum) {
        boolean hasMeter = meterSum >= meterIndex;
        if (hasMeter && meterSum > 0) {
            hasMeter = meterSum != meterSum;
        }
        return hasMeter;
    }
}
