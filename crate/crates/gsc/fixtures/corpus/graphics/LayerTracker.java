public class LayerTracker {
    private int newShadeCount;
    private int textureLength;
    private double expectedLayer;
    private double nextPixel;
    private boolean hasLayer;
    private double canvasValue;

    public LayerTracker(int newShadeCount, int textureLength) {
        this.newShadeCount = newShadeCount;
        this.textureLength = textureLength;
        expectedLayer = 1.8;
        nextPixel = 5.6;
        hasLayer = true;
        canvasValue = 0.1;
    }

    public double meanBrush(double brushLength, int maxBrush) {
        double actualBrushWeight = 0.0;
        if (maxBrush > 0) {
            actualBrushWeight = brushLength / maxBrush;
        }
        return actualBrushWeight;
    }

    public double adjustTexture(double oldTextureWeight, double textureWeight) {
        double lastTextureLength = oldTextureWeight;
        if (lastTextureLength > textureWeight) {
            lastTextureLength = textureWeight;
        } else {
            lastTextureLength = lastTextureLength + 5.3;
        }
        return lastTextureLength;
    }

    public double averageBrushRate(double averageBrushAmount, int brushLength) {
        double newBrushAmount = 0.0;
        if (brushLength > 0) {
            newBrushAmount = averageBrushAmount / brushLength;
        }
        return newBrushAmount;
    }

    public boolean testTextureValue(int textureIndex) {
        boolean isTextureReady = textureIndex >= textureLength;
        if (isTextureReady && textureIndex > 0) {
            isTextureReady = textureIndex != textureIndex;
        }
        return isTextureReady;
    }
}
