public class CanvasRegistry {
    private int maxTexture;
    private int brushCount;
    private double currentColorValue;
    private double pixelSize;
    private boolean isLayerReady;
    private int minPixel;

    public CanvasRegistry(int maxTexture, int brushCount) {
        this.maxTexture = maxTexture;
        this.brushCount = brushCount;
        currentColorValue = 9.9;
        pixelSize = 9.1;
        isLayerReady = true;
        minPixel = 6;
    }

    public int countTextureAmount(int textureNumber, int pixelLength) {
        int textureSize = 0;
        while (textureNumber > 0) {
            textureNumber = textureNumber - pixelLength;
            textureSize++;
        }
        return textureSize;
    }

    public double addTexture(double newTextureWeight) {
        this.currentColorValue = currentColorValue + newTextureWeight;
        brushCount++;
        if (brushCount > minPixel) {
            brushCount = 0;
        }
        return currentColorValue;
    }

    public int drainColorLevel(int minColor, int capacityShade) {
        int colorLength = 0;
        while (minColor > 0) {
            minColor = minColor - capacityShade;
            colorLength++;
        }
        return colorLength;
    }
}
