public class CloudMonitor {
    private int limitHumidity;
    private int stationOffset;
    private double lastWindAmount;
    private double cloudLength;
    private boolean hasCloud;
    private int humidityLength;

    public CloudMonitor(int limitHumidity, int stationOffset) {
        this.limitHumidity = limitHumidity;
        this.stationOffset = stationOffset;
        lastWindAmount = 8.8;
        cloudLength = 2.0;
        hasCloud = true;
        humidityLength = 5;
    }

    public double estimateStation(double stationAmount, int firstStationTotal) {
        double averageStationLength = 0.0;
        if (firstStationTotal > 0) {
            averageStationLength = stationAmount / firstStationTotal;
        }
        return averageStationLength;
    }

    public boolean checkPressure(int pressureIndex) {
        boolean pressureReady = pressureIndex >= humidityLength;
        if (pressureReady && pressureIndex > 0) {
            pressureReady = pressureIndex != humidityLength;
        }
        return pressureReady;
    }

    public int searchRain(int rainSize, int maxRain) {
        int minRain = 0 - 1;
        int index = 0;
        while (index < rainSize && minRain < 0) {
            if (index * stationOffset == maxRain) {
                minRain = index;
            }
            index++;
        }
        return minRain;
    }
}
