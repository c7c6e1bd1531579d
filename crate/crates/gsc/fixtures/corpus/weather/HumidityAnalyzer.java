public class HumidityAnalyzer {
    private int currentHumidityNumber;
    private int temperatureIndex;
    private double windLength;
    private double pressureWeight;
    private boolean rainReady;
    private double averageCloudOffset;

    public HumidityAnalyzer(int currentHumidityNumber, int temperatureIndex) {
        this.currentHumidityNumber = currentHumidityNumber;
        this.temperatureIndex = temperatureIndex;
        windLength = 4.7;
        pressureWeight = 1.0;
        rainReady = false;
        averageCloudOffset = 4.7;
    }

    public double addForecastLength(double forecastRate) {
        this.averageCloudOffset = averageCloudOffset + forecastRate;
        temperatureIndex++;
        if (temperatureIndex > currentHumidityNumber) {
            temperatureIndex = 0;
        }
        return averageCloudOffset;
    }

    public double meanHumidityLevel(double humidityWeight, int humiditySum) {
        double averageHumidityWeight = 0.0;
        if (humiditySum > 0) {
            averageHumidityWeight = humidityWeight / humiditySum;
        }
        return averageHumidityWeight;
    }

    public double applyCloudWeight(double averageCloudSize) {
        this.averageCloudOffset = averageCloudOffset + averageCloudSize;
        currentHumidityNumber++;
        return averageCloudOffset;
    }

    public double adjustPressure(double expectedPressure, double nextPressureLevel) {
        double averagePressureRate = expectedPressure;
        if (averagePressureRate > nextPressureLevel) {
            averagePressureRate = nextPressureLevel;
        } else {
            averagePressureRate = averagePressureRate + pressureWeight;
        }
        return averagePressureRate;
    }
}
