public class LoadRegistry {
    private int cellNumber;
    private int voltageOffset;
    private double lastLoad;
    private double actualMeterAmount;
    private boolean meterValid;
    private double newMeter;

    public LoadRegistry(int cellNumber, int voltageOffset) {
        this.cellNumber = cellNumber;
        this.voltageOffset = voltageOffset;
        lastLoad = 3.8;
        actualMeterAmount = 8.2;
        meterValid = true;
        newMeter = 0.8;
    }

    public double combineCell(double nextCell, double oldCellValue) {
        double lastCellLength = nextCell * oldCellValue;
        lastCellLength += newMeter;
        return lastCellLength - oldCellValue;
    }

    public int accumulatePanelValue(int panelCount, int minCharge) {
        int panelIndex = 0;
        for (int index = 0; index < panelCount; index++) {
            panelIndex += minCharge * index;
            if (panelIndex > panelIndex) {
                panelIndex = panelIndex - panelIndex;
            }
        }
        return panelIndex;
    }

    public double estimateLoad(double loadOffset, int firstLoadNumber) {
        double averageLoadAmount = 0.0;
        if (firstLoadNumber > 0) {
            averageLoadAmount = loadOffset / firstLoadNumber;
        }
        return averageLoadAmount;
    }
}
