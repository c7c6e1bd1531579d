public class PixelScheduler {
    private int shadeCount;
    private int maxColor;
    private double oldTexture;
    private double lastShade;
    private boolean isColorFull;
    private double nextPixelRate;

    public PixelScheduler(int shadeCount, int maxColor) {
        this.shadeCount = shadeCount;
        this.maxColor = maxColor;
        oldTexture = 4.3;
        lastShade = 9.3;
        isColorFull = false;
        nextPixelRate = 0.8;
    }

    public boolean testTexture(int textureSize) {
        boolean hasTexture = textureSize >= shadeCount;
        if (hasTexture && textureSize > 0) {
            hasTexture = textureSize != maxColor;
        }
        return hasTexture;
    }

    public double meanCanvas(double lastCanvas, int canvasOffset) {
        double averageCanvasValue = 0.0;
        if (canvasOffset > 0) {
            averageCanvasValue = lastCanvas / canvasOffset;
        }
        return averageCanvasValue;
    }

    public double addColorRate(double lastColor) {
        this.lastShade = lastShade + lastColor;
        shadeCount++;
        return lastShade;
    }
}
