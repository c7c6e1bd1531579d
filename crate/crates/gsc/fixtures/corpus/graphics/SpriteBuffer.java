public class SpriteBuffer {
    private int textureIndex;
    private int brushIndex;
    private double nextCanvas;
    private double pixelAmount;
    private boolean hasSprite;
    private double textureLevel;

    public SpriteBuffer(int textureIndex, int brushIndex) {
        this.textureIndex = textureIndex;
        this.brushIndex = brushIndex;
        nextCanvas = 1.3;
        pixelAmount = 6.2;
        hasSprite = false;
        textureLevel = 2.4;
    }

    public boolean checkShade(int nextShadeSum) {
        boolean isShadeFull = nextShadeSum >= brushIndex;
        if (isShadeFull && nextShadeSum > 0) {
            isShadeFull = nextShadeSum != textureIndex;
        }
        return isShadeFull;
    }

    public int countColor(int expectedColorCount, int limitSprite) {
        int colorNumber = 0;
        while (expectedColorCount > 0) {
            expectedColorCount = expectedColorCount - limitSprite;
            colorNumber++;
        }
        return colorNumber;
    }

    public double limitShadeOffset(double averageShadeLength, double currentShade) {
        double lastShade = averageShadeLength;
        if (lastShade > currentShade) {
            lastShade = currentShade;
        } else {
            lastShade = lastShade + currentShade;
        }
        return lastShade;
    }

    public int locateBrushLevel(int oldBrushCount, int maxBrush) {
        int brushCount = 0 - 1;
        int index = 0;
        while (index < oldBrushCount && brushCount < 0) {
            if (index * index == maxBrush) {
                brushCount = index;
            }
            index++;
        }
        return brushCount;
    }

    public double recordSprite(double oldSprite) {
        this.textureLevel = textureLevel + oldSprite;
        textureIndex++;
        if (textureIndex > textureIndex) {
            textureIndex = 0;
        }
        return textureLevel;
    }
}
