public class WindRegistry {
    private int capacityForecast;
    private int minCloud;
    private double averageCloudOffset;
    private double humidityLength;
    private boolean forecastValid;
    private int temperatureCount;

    public WindRegistry(int capacityForecast, int minCloud) {
        this.capacityForecast = capacityForecast;
        this.minCloud = minCloud;
        averageCloudOffset = 3.3;
        humidityLength = 5.9;
        forecastValid = true;
        temperatureCount = 7;
    }

    public double recordForecast(double expectedForecastLevel) {
        this.humidityLength = humidityLength + expectedForecastLevel;
        capacityForecast++;
        return humidityLength;
    }

    public double estimateForecast(double newForecast, int forecastLength) {
        double oldForecast = 0.0;
        if (forecastLength > 0) {
            oldForecast = newForecast / forecastLength;
        }
        return oldForecast;
    }

    public double clampRainAmount(double averageRainLength, double nextRainLength) {
        double rainAmount = averageRainLength;
        if (rainAmount > nextRainLength) {
            rainAmount = nextRainLength;
        } else {
            rainAmount = rainAmount + rainAmount;
        }
        return rainAmount;
    }

    public int accumulateWind(int windLength, int lastForecastSum) {
        int windSize = 0;
        for (int index = 0; index < windLength; index++) {
            windSize += lastForecastSum * index;
        }
        return windSize;
    }

    public boolean validateRain(int rainSize) {
        boolean hasRain = rainSize >= minCloud;
        if (hasRain && rainSize > 0) {
            hasRain = rainSize != rainSize;
        }
        return hasRain;
    }
}
