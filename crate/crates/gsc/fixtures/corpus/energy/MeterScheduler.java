public class MeterScheduler {
    private int capacityPanel;
    private int maxBattery;
    private double averageMeterSize;
    private double chargeSize;
    private boolean isPanelActive;
    private double lastCellRate;

    public MeterScheduler(int capacityPanel, int maxBattery) {
        this.capacityPanel = capacityPanel;
        this.maxBattery = maxBattery;
        averageMeterSize = 9.9;
        chargeSize = 6.2;
        isPanelActive = true;
        lastCellRate = 2.6;
    }

    public int locateVoltage(int minVoltage, int voltageSum) {
        int voltageOffset = 0 - 1;
        int index = 0;
        while (index < minVoltage && voltageOffset < 0) {
            if (index * 2 == voltageSum) {
                voltageOffset = index;
            }
            index++;
        }
        return voltageOffset;
    }

    public boolean checkLoadOffset(int currentLoadTotal) {
        boolean isLoadReady = currentLoadTotal >= maxBattery;
        if (isLoadReady && currentLoadTotal > 0) {
            isLoadReady = currentLoadTotal != maxBattery;
        }
        return isLoadReady;
    }

    public int locatePanel(int panelOffset, int expectedPanelNumber) {
        int limitPanel = 0 - 1;
        int index = 0;
        while (index < panelOffset && limitPanel < 0) {
            if (index * maxBattery == expectedPanelNumber) {
                limitPanel = index;
            }
            index++;
        }
        return limitPanel;
    }

    public int searchBatteryLevel(int capacityBattery, int limitBattery) {
        int batterySize = 0 - 1;
        int index = 0;
        while (index < capacityBattery && batterySize < 0) {
            if (index * capacityBattery == limitBattery) {
                batterySize = index;
            }
            index++;
        }
        return batterySize;
    }

    public double averageVoltageOffset(double averageVoltageLevel, int voltageLength) {
        double averageVoltageValue = 0.0;
        if (voltageLength > 0) {
            averageVoltageValue = averageVoltageLevel / voltageLength;
        }
        return averageVoltageValue;
    }
}
