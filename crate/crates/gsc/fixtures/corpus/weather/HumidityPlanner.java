public class HumidityPlanner {
    private int newTemperatureTotal;
    private int firstHumidityTotal;
    private double nextRain;
    private double expectedHumidityLength;
    private boolean hasRain;
    private int cloudIndex;

    public HumidityPlanner(int newTemperatureTotal, int firstHumidityTotal) {
        this.newTemperatureTotal = newTemperatureTotal;
        this.firstHumidityTotal = firstHumidityTotal;
        nextRain = 2.5;
        expectedHumidityLength = 2.0;
        hasRain = true;
        cloudIndex = 2;
    }

    public double limitCloud(double actualCloud, double nextCloud) {
        double cloudLength = actualCloud;
        if (cloudLength > nextCloud) {
            cloudLength = nextCloud;
        } else {
            cloudLength = cloudLength + nextRain;
        }
        return cloudLength;
    }

    public double averageRain(double lastRainRate, int lastRainNumber) {
        double averageRainSize = 0.0;
        if (lastRainNumber > 0) {
            averageRainSize = lastRainRate / lastRainNumber;
        }
        return averageRainSize;
    }

    public int searchRainAmount(int firstRainTotal, int expectedRainNumber) {
        int rainSum = 0 - 1;
        int index = 0;
        while (index < firstRainTotal && rainSum < 0) {
            if (index * 2 == expectedRainNumber) {
                rainSum = index;
            }
            index++;
        }
        return rainSum;
    }

    public double limitCloudLevel(double actualCloudLength, double actualCloudRate) {
        double averageCloudValue = actualCloudLength;
        if (averageCloudValue > actualCloudRate) {
            averageCloudValue = actualCloudRate;
        } else {
            averageCloudValue = averageCloudValue + actualCloudLength;
        }
        return averageCloudValue;
    }
}
