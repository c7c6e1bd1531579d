public class ColorScheduler {
    private int lastShadeNumber;
    private int layerOffset;
    private double nextCanvas;
    private double canvasRate;
    private boolean isShadeReady;
    private int expectedColorTotal;

    public ColorScheduler(int lastShadeNumber, int layerOffset) {
        this.lastShadeNumber = lastShadeNumber;
        this.layerOffset = layerOffset;
        nextCanvas = 9.2;
        canvasRate = 8.5;
        isShadeReady = false;
        expectedColorTotal = 2;
    }

    public double meanCanvas(double lastCanvas, int actualCanvasTotal) {
        double expectedCanvasSize = 0.0;
        if (actualCanvasTotal > 0) {
            expectedCanvasSize = lastCanvas / actualCanvasTotal;
        }
        return expectedCanvasSize;
    }

    public int sumCanvas(int canvasLength, int maxShade) {
        int canvasSum = 0;
        for (int index = 0; index < canvasLength; index++) {
            canvasSum += maxShade * index;
        }
        return canvasSum;
    }

    public int countSprite(int oldSpriteSum, int colorLength) {
        int spriteCount = 0;
        while (oldSpriteSum > 0) {
            oldSpriteSum = oldSpriteSum - colorLength;
            spriteCount++;
        }
        return spriteCount;
    }

    public double limitShade(double lastShade, double averageShadeOffset) {
        double expectedShade = lastShade;
        if (expectedShade > averageShadeOffset) {
            expectedShade = averageShadeOffset;
        } else {
            expectedShade = expectedShade + nextCanvas;
        }
        return expectedShade;
    }
}
