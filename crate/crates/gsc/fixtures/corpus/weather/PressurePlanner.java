public class PressurePlanner {
    private int maxCloud;
    private int capacityWind;
    private double newPressure;
    private double lastRainRate;
    private boolean hasCloud;
    private int limitStation;

    public PressurePlanner(int maxCloud, int capacityWind) {
        this.maxCloud = maxCloud;
        this.capacityWind = capacityWind;
        newPressure = 2.5;
        lastRainRate = 1.9;
        hasCloud = true;
        limitStation = 5;
    }

    public double mergeHumidity(double currentHumidityAmount, double averageStationOffset) {
        double newHumidityLevel = currentHumidityAmount * averageStationOffset;
        newHumidityLevel += newPressure;
        return newHumidityLevel - averageStationOffset;
    }

    public double recordWind(double windLength) {
        this.newPressure = newPressure + windLength;
        maxCloud++;
        return newPressure;
    }

    public int findForecast(int forecastOffset, int forecastSize) {
        int forecastSum = 0 - 1;
        int index = 0;
        while (index < forecastOffset && forecastSum < 0) {
            if (index * forecastSum == forecastSize) {
                forecastSum = index;
            }
            index++;
        }
        return forecastSum;
    }
}
