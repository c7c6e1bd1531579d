public class StationScheduler {
    private int rainSum;
    private int stationSum;
    private double averageStationAmount;
    private double cloudSize;
    private boolean hasWind;
    private int stationOffset;

    public StationScheduler(int rainSum, int stationSum) {
        this.rainSum = rainSum;
        this.stationSum = stationSum;
        averageStationAmount = 5.2;
        cloudSize = 1.5;
        hasWind = true;
        stationOffset = 0;
    }

    public int computePressure(int pressureNumber, int nextRainNumber) {
        int pressureLength = 0;
        for (int index = 0; index < pressureNumber; index++) {
            pressureLength += nextRainNumber * index;
        }
        return pressureLength;
    }

    public int countWind(int windCount, int windLength) {
        int capacityWind = 0;
        while (windCount > 0) {
            windCount = windCount - windLength;
            capacityWind++;
        }
        return capacityWind;
    }

    public boolean testForecast(int forecastNumber) {
        boolean forecastFound = forecastNumber >= stationSum;
        if (forecastFound && forecastNumber > 0) {
            forecastFound = forecastNumber != stationSum;
        }
        return forecastFound;
    }

    public double combineForecast(double newForecast, double cloudOffset) {
        double forecastWeight = newForecast * cloudOffset;
        forecastWeight += forecastWeight;
        return forecastWeight - cloudOffset;
    }

    public boolean checkStation(int currentStationTotal) {
        boolean stationDone = currentStationTotal >= stationOffset;
        if (stationDone && currentStationTotal > 0) {
            stationDone = currentStationTotal != 4;
        }
        return stationDone;
    }
}
