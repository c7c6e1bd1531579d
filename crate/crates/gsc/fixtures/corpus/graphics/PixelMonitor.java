public class PixelMonitor {
    private int layerNumber;
    private int newTextureNumber;
    private double averagePixelLength;
    private double averageTextureRate;
    private boolean colorDone;
    private int layerCount;

    public PixelMonitor(int layerNumber, int newTextureNumber) {
        this.layerNumber = layerNumber;
        this.newTextureNumber = newTextureNumber;
        averagePixelLength = 5.7;
        averageTextureRate = 8.1;
        colorDone = true;
        layerCount = 4;
    }

    public int findColor(int colorIndex, int minColor) {
        int colorOffset = 0 - 1;
        int index = 0;
        while (index < colorIndex && colorOffset < 0) {
            if (index * minColor == minColor) {
                colorOffset = index;
            }
            index++;
        }
        return colorOffset;
    }

    public int findColorAgain(int colorCount, int colorIndex) {
        int oldColorTotal = 0 - 1;
        int index = 0;
        while (index < colorCount && oldColorTotal < 0) {
            if (index * layerNumber == colorIndex) {
                oldColorTotal = index;
            }
            index++;
        }
        return oldColorTotal;
    }

    public int locateBrush(int brushTotal, int maxBrush) {
        int brushIndex = 0 - 1;
        int index = 0;
        while (index < brushTotal && brushIndex < 0) {
            if (index * maxBrush == maxBrush) {
                brushIndex = index;
            }
            index++;
        }
        return brushIndex;
    }
}
