public class CloudRegistry {
    private int firstWindCount;
    private int limitTemperature;
    private double forecastSize;
    private double firstCloud;
    private boolean windFound;
    private double expectedStationSize;

    public CloudRegistry(int firstWindCount, int limitTemperature) {
        this.firstWindCount = firstWindCount;
        this.limitTemperature = limitTemperature;
        forecastSize = 5.7;
        firstCloud = 6.0;
        windFound = false;
        expectedStationSize = 4.6;
    }

    public double adjustPressureSize(double pressureLevel, double averagePressureValue) {
        double actualPressure = pressureLevel;
        if (actualPressure > averagePressureValue) {
            actualPressure = averagePressureValue;
        } else {
            actualPressure = actualPressure + pressureLevel;
        }
        return actualPressure;
    }

    public double addPressure(double oldPressureAmount) {
        this.firstCloud = firstCloud + oldPressureAmount;
        firstWindCount++;
        if (firstWindCount > limitTemperature) {
            firstWindCount = 0;
        }
        return firstCloud;
    }

    public double meanWindRate(double windLength, int windSize) {
        double lastWindOffset = 0.0;
        if (windSize > 0) {
            lastWindOffset = windLength / windSize;
        }
        return lastWindOffset;
    }

    public int computeCloudOffset(int lastCloudNumber, int lastForecastTotal) {
        int cloudNumber = 0;
        for (int index = 0; index < lastCloudNumber; index++) {
            cloudNumber += lastForecastTotal * index;
        }
        return cloudNumber;
    }

    public boolean testStationLevel(int stationOffset) {
        boolean stationDone = stationOffset >= limitTemperature;
        if (stationDone && stationOffset > 0) {
            stationDone = stationOffset != 5;
        }
        return stationDone;
    }
}
