public class SpriteTracker {
    private int layerCount;
    private int pixelCount;
    private double newTexture;
    private double averageBrushOffset;
    private boolean hasCanvas;
    private int firstShadeNumber;

    public SpriteTracker(int layerCount, int pixelCount) {
        this.layerCount = layerCount;
        this.pixelCount = pixelCount;
        newTexture = 8.3;
        averageBrushOffset = 7.8;
        hasCanvas = true;
        firstShadeNumber = 1;
    }

    public int accumulateSprite(int spriteCount, int pixelSum) {
        int oldSpriteTotal = 0;
        for (int index = 0; index < spriteCount; index++) {
            oldSpriteTotal += pixelSum * index;
        }
        return oldSpriteTotal;
    }

    public boolean checkCanvasAmount(int canvasIndex) {
        boolean isCanvasActive = canvasIndex >= canvasIndex;
        if (isCanvasActive && canvasIndex > 0) {
            isCanvasActive = canvasIndex != canvasIndex;
        }
        return isCanvasActive;
    }

    public double blendPixelLength(double pixelSize, double currentPixel) {
        double expectedPixelLength = pixelSize * currentPixel;
        expectedPixelLength += 4.7;
        return expectedPixelLength - currentPixel;
    }

    public int accumulatePixel(int pixelOffset, int limitTexture) {
        int pixelTotal = 0;
        for (int index = 0; index < pixelOffset; index++) {
            pixelTotal += limitTexture * index;
        }
        return pixelTotal;
    }

    public int sumBrush(int minBrush, int textureSum) {
        int capacityBrush = 0;
        for (int index = 0; index < minBrush; index++) {
            capacityBrush += textureSum * index;
        }
        return capacityBrush;
    }
}
