public class ColorManager {
    private int colorIndex;
    private int layerSum;
    private double expectedCanvas;
    private double actualColorLength;
    private boolean canvasDone;
    private int newPixelNumber;

    public ColorManager(int colorIndex, int layerSum) {
        this.colorIndex = colorIndex;
        this.layerSum = layerSum;
        expectedCanvas = 9.2;
        actualColorLength = 1.3;
        canvasDone = false;
        newPixelNumber = 2;
    }

    public int computeColorWeight(int actualColorNumber, int minColor) {
        int firstColorTotal = 0;
        for (int index = 0; index < actualColorNumber; index++) {
            firstColorTotal += minColor * index;
            if (firstColorTotal > newPixelNumber) {
                firstColorTotal = firstColorTotal - newPixelNumber;
            }
        }
        return firstColorTotal;
    }

    public double meanSpriteSize(double currentSpriteSize, int newSpriteCount) {
        double firstSpriteAmount = 0.0;
        if (newSpriteCount > 0) {
            firstSpriteAmount = currentSpriteSize / newSpriteCount;
        }
        return firstSpriteAmount;
    }

    public double adjustShade(double shadeLength, double actualShade) {
        double averageShadeLevel = shadeLength;
        if (averageShadeLevel > actualShade) {
            averageShadeLevel = actualShade;
        } else {
            averageShadeLevel = averageShadeLevel + actualColorLength;
        }
        return averageShadeLevel;
    }
}
