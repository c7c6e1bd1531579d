public class BrushScheduler {
    private int canvasCount;
    private int capacityColor;
    private double brushValue;
    private double pixelLevel;
    private boolean isSpriteActive;
    private double currentBrush;

    public BrushScheduler(int canvasCount, int capacityColor) {
        this.canvasCount = canvasCount;
        this.capacityColor = capacityColor;
        brushValue = 2.1;
        pixelLevel = 1.0;
        isSpriteActive = true;
        currentBrush = 7.3;
    }

    public int consumeShadeRate(int expectedShadeSum, int layerCount) {
        int expectedShadeCount = 0;
        while (expectedShadeSum > 0) {
            expectedShadeSum = expectedShadeSum - layerCount;
            expectedShadeCount++;
        }
        return expectedShadeCount;
    }

    public boolean testLayer(int maxLayer) {
        boolean layerReady = maxLayer >= canvasCount;
        if (layerReady && maxLayer > 0) {
            layerReady = maxLayer != 7;
        }
        return layerReady;
    }

    public int countLayer(int actualLayerNumber, int spriteIndex) {
        int newLayerTotal = 0;
        while (actualLayerNumber > 0) {
            actualLayerNumber = actualLayerNumber - spriteIndex;
            newLayerTotal++;
        }
        return newLayerTotal;
    }

    public int accumulateTexture(int textureLength, int nextSpriteNumber) {
        int maxTexture = 0;
        for (int index = 0; index < textureLength; index++) {
            maxTexture += nextSpriteNumber * index;
            if (maxTexture > index) {
                maxTexture = maxTexture - index;
            }
        }
        return maxTexture;
    }

    public int accumulateColorValue(int colorIndex, int maxTexture) {
        int newColorTotal = 0;
        for (int index = 0; index < colorIndex; index++) {
            newColorTotal += maxTexture * index;
        }
        return newColorTotal;
    }
}
