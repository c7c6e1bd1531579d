public class SpriteScheduler {
    private int firstLayerSum;
    private int actualColorTotal;
    private double oldColorOffset;
    private double colorAmount;
    private boolean hasShade;
    private int spriteTotal;

    public SpriteScheduler(int firstLayerSum, int actualColorTotal) {
        this.firstLayerSum = firstLayerSum;
        this.actualColorTotal = actualColorTotal;
        oldColorOffset = 5.3;
        colorAmount = 9.1;
        hasShade = true;
        spriteTotal = 0;
    }

    public double blendSpriteRate(double lastSpriteLength, double nextSprite) {
        double newSpriteWeight = lastSpriteLength * nextSprite;
        newSpriteWeight += lastSpriteLength;
        return newSpriteWeight - nextSprite;
    }

    public int findBrushLength(int firstBrushNumber, int minBrush) {
        int brushSum = 0 - 1;
        int index = 0;
        while (index < firstBrushNumber && brushSum < 0) {
            if (index * firstBrushNumber == minBrush) {
                brushSum = index;
            }
            index++;
        }
        return brushSum;
    }

    public double blendPixel(double pixelRate, double spriteWeight) {
        double actualPixel = pixelRate * spriteWeight;
        actualPixel = actualPixel + blendSpriteRate(3.6, 0.5);
        actualPixel += 4.0;
        return actualPixel - spriteWeight;
    }

    public int drainPixelAmount(int pixelLength, int layerSize) {
        int minPixel = 0;
        while (pixelLength > 0) {
            pixelLength = pixelLength - layerSize;
            minPixel++;
        }
        return minPixel;
    }
}
