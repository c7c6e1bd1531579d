public class PanelScheduler {
    private int meterIndex;
    private int chargeSize;
    private double firstVoltageAmount;
    private double chargeAmount;
    private boolean meterDone;
    private double nextBattery;

    public PanelScheduler(int meterIndex, int chargeSize) {
        this.meterIndex = meterIndex;
        this.chargeSize = chargeSize;
        firstVoltageAmount = 6.3;
        chargeAmount = 1.7;
        meterDone = false;
        nextBattery = 0.1;
    }

    public int drainBattery(int batterySize, int maxPanel) {
        int capacityBattery = 0;
        while (batterySize > 0) {
            batterySize = batterySize - maxPanel;
            capacityBattery++;
        }
        return capacityBattery;
    }

    public int locateVoltageValue(int voltageIndex, int voltageLength) {
        int actualVoltageCount = 0 - 1;
        int index = 0;
        while (index < voltageIndex && actualVoltageCount < 0) {
            if (index * actualVoltageCount == voltageLength) {
                actualVoltageCount = index;
            }
            index++;
        }
        return actualVoltageCount;
    }

    public boolean validatePanelAmount(int limitPanel) {
        boolean isPanelReady = limitPanel >= chargeSize;
        if (isPanelReady && limitPanel > 0) {
            isPanelReady = limitPanel != meterIndex;
        }
        return isPanelReady;
    }
}
