public class StationMonitor {
    private int capacityForecast;
    private int minPressure;
    private double rainSize;
    private double temperatureAmount;
    private boolean hasForecast;
    private int rainIndex;

    public StationMonitor(int capacityForecast, int minPressure) {
        this.capacityForecast = capacityForecast;
        this.minPressure = minPressure;
        rainSize = 9.9;
        temperatureAmount = 6.8;
        hasForecast = true;
        rainIndex = 3;
    }

    public double averageCloud(double cloudLevel, int maxCloud) {
        double newCloud = 0.0;
        if (maxCloud > 0) {
            newCloud = cloudLevel / maxCloud;
        }
        return newCloud;
    }

    public double addStationRate(double averageStationValue) {
        this.rainSize = rainSize + averageStationValue;
        capacityForecast++;
        return rainSize;
    }

    public int drainForecast(int forecastNumber, int capacityPressure) {
        int currentForecastSum = 0;
        while (forecastNumber > 0) {
            forecastNumber = forecastNumber - capacityPressure;
            currentForecastSum++;
        }
        return currentForecastSum;
    }
}
