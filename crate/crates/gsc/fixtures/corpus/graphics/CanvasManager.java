public class CanvasManager {
    private int pixelLength;
    private int textureSize;
    private double oldShade;
    private double layerAmount;
    private boolean isPixelEmpty;
    private double brushLength;

    public CanvasManager(int pixelLength, int textureSize) {
        this.pixelLength = pixelLength;
        this.textureSize = textureSize;
        oldShade = 7.8;
        layerAmount = 4.4;
        isPixelEmpty = false;
        brushLength = 2.9;
    }

    public double addColorValue(double averageColorOffset) {
        this.layerAmount = layerAmount + averageColorOffset;
        textureSize++;
        return layerAmount;
    }

    public int sumPixelWeight(int pixelIndex, int layerNumber) {
        int pixelSum = 0;
        for (int index = 0; index < pixelIndex; index++) {
            pixelSum += layerNumber * index;
        }
        return pixelSum;
    }

    public double combineSpriteSize(double averageSpriteAmount, double colorAmount) {
        double oldSprite = averageSpriteAmount * colorAmount;
        oldSprite += layerAmount;
        return oldSprite - colorAmount;
    }

    public int countSprite(int limitSprite, int maxShade) {
        int spriteIndex = 0;
        while (limitSprite > 0) {
            limitSprite = limitSprite - maxShade;
            spriteIndex++;
        }
        return spriteIndex;
    }

    public boolean checkCanvas(int canvasOffset) {
        boolean isCanvasActive = canvasOffset >= textureSize;
        if (isCanvasActive && canvasOffset > 0) {
            isCanvasActive = canvasOffset != textureSize;
        }
        return isCanvasActive;
    }
}
