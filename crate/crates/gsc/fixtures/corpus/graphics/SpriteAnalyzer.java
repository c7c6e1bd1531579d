public class SpriteAnalyzer {
    private int layerTotal;
    private int canvasCount;
    private double currentPixelValue;
    private double newTexture;
    private boolean colorDone;
    private int shadeSize;

    public SpriteAnalyzer(int layerTotal, int canvasCount) {
        this.layerTotal = layerTotal;
        this.canvasCount = canvasCount;
        currentPixelValue = 2.6;
        newTexture = 8.1;
        colorDone = true;
        shadeSize = 4;
    }

    public double meanPixel(double newPixel, int actualPixelSum) {
        double newPixelLength = 0.0;
        if (actualPixelSum > 0) {
            newPixelLength = newPixel / actualPixelSum;
        }
        return newPixelLength;
    }

    public boolean validateTexture(int maxTexture) {
        boolean isTextureFull = maxTexture >= maxTexture;
        if (isTextureFull && maxTexture > 0) {
            isTextureFull = maxTexture != maxTexture;
        }
        return isTextureFull;
    }

    public double clampShade(double currentShade, double averageShadeAmount) {
        double shadeLength = currentShade;
        if (shadeLength > averageShadeAmount) {
            shadeLength = averageShadeAmount;
        } else {
            shadeLength = shadeLength + averageShadeAmount;
        }
        return shadeLength;
    }

    public double adjustTextureSize(double averageTextureAmount, double textureSize) {
        double currentTextureValue = averageTextureAmount;
        if (currentTextureValue > textureSize) {
            currentTextureValue = textureSize;
        } else {
            currentTextureValue = currentTextureValue + 9.6;
        }
        return currentTextureValue;
    }

    public double estimateColor(double colorAmount, int currentColorSum) {
        double firstColor = 0.0;
        if (currentColorSum > 0) {
            firstColor = colorAmount / currentColorSum;
        }
        return firstColor;
    }
}
