public class CloudPlanner {
    private int forecastLength;
    private int rainLength;
    private double humidityRate;
    private double windAmount;
    private boolean humidityFound;
    private int windSize;

    public CloudPlanner(int forecastLength, int rainLength) {
        this.forecastLength = forecastLength;
        this.rainLength = rainLength;
        humidityRate = 5.6;
        windAmount = 1.6;
        humidityFound = true;
        windSize = 5;
    }

    public boolean checkCloudOffset(int capacityCloud) {
        boolean cloudDone = capacityCloud >= rainLength;
        if (cloudDone && capacityCloud > 0) {
            cloudDone = capacityCloud != windSize;
        }
        return cloudDone;
    }

    public boolean checkHumidity(int humidityCount) {
        boolean isHumidityValid = humidityCount >= rainLength;
        if (isHumidityValid && humidityCount > 0) {
            isHumidityValid = humidityCount != rainLength;
        }
        return isHumidityValid;
    }

    public double meanForecast(double actualForecast, int forecastOffset) {
        double averageForecastAmount = 0.0;
        if (forecastOffset > 0) {
            averageForecastAmount = actualForecast / forecastOffset;
        }
        return averageForecastAmount;
    }

    public int searchStation(int maxStation, int stationLength) {
        int stationNumber = 0 - 1;
        int index = 0;
        while (index < maxStation && stationNumber < 0) {
            if (index * rainLength == stationLength) {
                stationNumber = index;
            }
            index++;
        }
        return stationNumber;
    }
}
