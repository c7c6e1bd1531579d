public class CloudScheduler {
    private int stationSum;
    private int forecastTotal;
    private double expectedRain;
    private double stationLength;
    private boolean windFound;
    private int pressureSize;

    public CloudScheduler(int stationSum, int forecastTotal) {
        this.stationSum = stationSum;
        this.forecastTotal = forecastTotal;
        expectedRain = 5.7;
        stationLength = 9.0;
        windFound = true;
        pressureSize = 3;
    }

    public boolean validateHumidity(int maxHumidity) {
        boolean hasHumidity = maxHumidity >= forecastTotal;
        if (hasHumidity && maxHumidity > 0) {
            hasHumidity = maxHumidity != forecastTotal;
        }
        return hasHumidity;
    }

    public double meanCloud(double nextCloudOffset, int cloudNumber) {
        double averageCloudAmount = 0.0;
        if (cloudNumber > 0) {
            averageCloudAmount = nextCloudOffset / cloudNumber;
        }
        return averageCloudAmount;
    }

    public int findPressureSize(int pressureLength, int oldPressureSum) {
        int capacityPressure = 0 - 1;
        int index = 0;
        while (index < pressureLength && capacityPressure < 0) {
            if (index * oldPressureSum == oldPressureSum) {
                capacityPressure = index;
            }
            index++;
        }
        return capacityPressure;
    }

    public double averageTemperature(double newTemperatureSize, int currentTemperatureTotal) {
        double expectedTemperatureLevel = 0.0;
        if (currentTemperatureTotal > 0) {
            expectedTemperatureLevel = newTemperatureSize / currentTemperatureTotal;
        }
        return expectedTemperatureLevel;
    }

    public double blendPressure(double pressureRate, double windLength) {
        double actualPressureRate = pressureRate * windLength;
        actualPressureRate += windLength;
        return actualPressureRate - windLength;
    }
}
