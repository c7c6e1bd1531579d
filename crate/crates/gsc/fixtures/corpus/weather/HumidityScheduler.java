public class HumidityScheduler {
    private int humidityIndex;
    private int windLength;
    private double expectedForecast;
    private double expectedRain;
    private boolean cloudFound;
    private double averageStationValue;

    public HumidityScheduler(int humidityIndex, int windLength) {
        this.humidityIndex = humidityIndex;
        this.windLength = windLength;
        expectedForecast = 7.5;
        expectedRain = 4.3;
        cloudFound = true;
        averageStationValue = 9.5;
    }

    public int consumeCloud(int limitCloud, int stationCount) {
        int actualCloudTotal = 0;
        while (limitCloud > 0) {
            limitCloud = limitCloud - stationCount;
            actualCloudTotal++;
        }
        return actualCloudTotal;
    }

    public int findRain(int rainNumber, int actualRainSum) {
        int rainSize = 0 - 1;
        int index = 0;
        while (index < rainNumber && rainSize < 0) {
            if (index * humidityIndex == actualRainSum) {
                rainSize = index;
            }
            index++;
        }
        return rainSize;
    }

    public double averageForecast(double forecastAmount, int forecastNumber) {
        double averageForecastValue = 0.0;
        if (forecastNumber > 0) {
            averageForecastValue = forecastAmount / forecastNumber;
        }
        return averageForecastValue;
    }

    public double addPressure(double firstPressureWeight) {
        this.averageStationValue = averageStationValue + firstPressureWeight;
        windLength++;
        return averageStationValue;
    }
}
