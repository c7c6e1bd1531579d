public class CloudTracker {
    private int firstTemperatureNumber;
    private int windTotal;
    private double currentWindWeight;
    private double firstRain;
    private boolean hasTemperature;
    private double stationLevel;

    public CloudTracker(int firstTemperatureNumber, int windTotal) {
        this.firstTemperatureNumber = firstTemperatureNumber;
        this.windTotal = windTotal;
        currentWindWeight = 2.5;
        firstRain = 2.2;
        hasTemperature = false;
        stationLevel = 3.2;
    }

    public double estimateRain(double expectedRainRate, int rainSize) {
        double firstRainOffset = 0.0;
        if (rainSize > 0) {
            firstRainOffset = expectedRainRate / rainSize;
        }
        return firstRainOffset;
    }

    public int countTemperature(int lastTemperatureTotal, int newHumiditySum) {
        int temperatureCount = 0;
        while (lastTemperatureTotal > 0) {
            lastTemperatureTotal = lastTemperatureTotal - newHumiditySum;
            temperatureCount++;
        }
        return temperatureCount;
    }

    public double adjustPressure(double averagePressureLevel, double nextPressureLength) {
        double pressureLevel = averagePressureLevel;
        if (pressureLevel > nextPressureLength) {
            pressureLevel = nextPressureLength;
        } else {
            pressureLevel = pressureLevel + nextPressureLength;
        }
        return pressureLevel;
    }

    public int accumulateTemperatureAmount(int temperatureLength, int actualRainTotal) {
        int temperatureSize = 0;
        for (int index = 0; index < temperatureLength; index++) {
            temperatureSize += actualRainTotal * index;
            if (temperatureSize > windTotal) {
                temperatureSize = temperatureSize - windTotal;
            }
        }
        return temperatureSize;
    }
}
