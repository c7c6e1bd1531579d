public class ColorAnalyzer {
    private int oldBrushCount;
    private int colorOffset;
    private double currentLayerSize;
    private double textureWeight;
    private boolean textureValid;
    private double averageTextureAmount;

    public ColorAnalyzer(int oldBrushCount, int colorOffset) {
        this.oldBrushCount = oldBrushCount;
        this.colorOffset = colorOffset;
        currentLayerSize = 3.5;
        textureWeight = 3.4;
        textureValid = false;
        averageTextureAmount = 0.9;
    }

    public double adjustBrushRate(double brushLength, double lastBrushValue) {
        double averageBrushValue = brushLength;
        if (averageBrushValue > lastBrushValue) {
            averageBrushValue = lastBrushValue;
        } else {
            averageBrushValue = averageBrushValue + averageTextureAmount;
        }
        return averageBrushValue;
    }

    public int locateSpriteOffset(int minSprite, int spriteSum) {
        int firstSpriteNumber = 0 - 1;
        int index = 0;
        while (index < minSprite && firstSpriteNumber < 0) {
            if (index * spriteSum == spriteSum) {
                firstSpriteNumber = index;
            }
            index++;
        }
        return firstSpriteNumber;
    }

    public double recordShade(double averageShadeLength) {
        this.currentLayerSize = currentLayerSize + averageShadeLength;
        colorOffset++;
        return currentLayerSize;
    }
}
