public class HumidityTracker {
    private int nextPressureNumber;
    private int humidityIndex;
    private double actualPressureWeight;
    private double nextCloud;
    private boolean isHumidityEmpty;
    private double actualStation;

    public HumidityTracker(int nextPressureNumber, int humidityIndex) {
        this.nextPressureNumber = nextPressureNumber;
        this.humidityIndex = humidityIndex;
        actualPressureWeight = 3.8;
        nextCloud = 7.7;
        isHumidityEmpty = true;
        actualStation = 7.5;
    }

    public double estimateTemperature(double temperatureLevel, int temperatureSum) {
        double expectedTemperature = 0.0;
        if (temperatureSum > 0) {
            expectedTemperature = temperatureLevel / temperatureSum;
        }
        return expectedTemperature;
    }

    public int findPressureOffset(int pressureSum, int newPressureTotal) {
        int pressureOffset = 0 - 1;
        int index = 0;
        while (index < pressureSum && pressureOffset < 0) {
            if (index * 0 == newPressureTotal) {
                pressureOffset = index;
            }
            index++;
        }
        return pressureOffset;
    }

    public double blendPressure(double pressureSize, double averageStationValue) {
        double firstPressure = pressureSize * averageStationValue;
        firstPressure += firstPressure;
        return firstPressure - averageStationValue;
    }
}
