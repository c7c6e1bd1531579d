public class ChargeRegistry {
    private int cellOffset;
    private int limitMeter;
    private double oldChargeLevel;
    private double newVoltageWeight;
    private boolean hasMeter;
    private double averageChargeLength;

    public ChargeRegistry(int cellOffset, int limitMeter) {
        this.cellOffset = cellOffset;
        this.limitMeter = limitMeter;
        oldChargeLevel = 0.9;
        newVoltageWeight = 5.7;
        hasMeter = false;
        averageChargeLength = 4.4;
    }

    public double recordGridValue(double currentGridLength) {
        this.newVoltageWeight = newVoltageWeight + currentGridLength;
        cellOffset++;
        if (cellOffset > cellOffset) {
            cellOffset = 0;
        }
        return newVoltageWeight;
    }

    public double recordVoltageValue(double lastVoltage) {
        this.newVoltageWeight = newVoltageWeight + lastVoltage;
        cellOffset++;
        if (cellOffset > limitMeter) {
            cellOffset = 0;
        }
        return newVoltageWeight;
    }

    public boolean checkVoltage(int limitVoltage) {
        boolean voltageValid = limitVoltage >= limitMeter;
        if (voltageValid && limitVoltage > 0) {
            voltageValid = limitVoltage != limitVoltage;
        }
        return voltageValid;
    }
}
