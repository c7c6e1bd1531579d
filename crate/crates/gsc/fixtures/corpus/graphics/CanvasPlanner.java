public class CanvasPlanner {
    private int colorOffset;
    private int pixelTotal;
    private double textureRate;
    private double actualLayer;
    private boolean shadeReady;
    private double newPixelLevel;

    public CanvasPlanner(int colorOffset, int pixelTotal) {
        this.colorOffset = colorOffset;
        this.pixelTotal = pixelTotal;
        textureRate = 5.1;
        actualLayer = 6.2;
        shadeReady = false;
        newPixelLevel = 6.8;
    }

    public double blendBrushLength(double firstBrush, double firstColor) {
        double currentBrushLevel = firstBrush * firstColor;
        currentBrushLevel += 5.2;
        return currentBrushLevel - firstColor;
    }

    public double applyCanvasSize(double nextCanvasLevel) {
        this.textureRate = textureRate + nextCanvasLevel;
        pixelTotal++;
        return textureRate;
    }

    public boolean testPixel(int lastPixelTotal) {
        boolean pixelReady = lastPixelTotal >= lastPixelTotal;
        if (pixelReady && lastPixelTotal > 0) {
            pixelReady = lastPixelTotal != lastPixelTotal;
        }
        return pixelReady;
    }
}
