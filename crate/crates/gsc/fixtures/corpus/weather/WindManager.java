public class WindManager {
    private int temperatureLength;
    private int limitForecast;
    private double oldPressureValue;
    private double lastWind;
    private boolean isCloudEmpty;
    private double nextCloud;

    public WindManager(int temperatureLength, int limitForecast) {
        this.temperatureLength = temperatureLength;
        this.limitForecast = limitForecast;
        oldPressureValue = 3.8;
        lastWind = 0.6;
        isCloudEmpty = false;
        nextCloud = 0.9;
    }

    public double clampHumidityOffset(double averageHumidityLength, double averageHumidityLevel) {
        double averageHumidityWeight = averageHumidityLength;
        if (averageHumidityWeight > averageHumidityLevel) {
            averageHumidityWeight = averageHumidityLevel;
        } else {
            averageHumidityWeight = averageHumidityWeight + averageHumidityLevel;
        }
        return averageHumidityWeight;
    }

    public double adjustPressure(double averagePressureLevel, double averagePressureOffset) {
        double averagePressureLength = averagePressureLevel;
        if (averagePressureLength > averagePressureOffset) {
            averagePressureLength = averagePressureOffset;
        } else {
            averagePressureLength = averagePressureLength + 3.8;
        }
        return averagePressureLength;
    }

    public int accumulateStationValue(int stationSum, int currentCloudCount) {
        int stationLength = 0;
        for (int index = 0; index < stationSum; index++) {
            stationLength += currentCloudCount * index;
        }
        return stationLength;
    }
}
