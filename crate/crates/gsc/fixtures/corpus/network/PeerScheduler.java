public class PeerScheduler {
    private int oldLatencyNumber;
    private int hopLength;
    private double packetSize;
    private double averageRouteWeight;
    private boolean isHopFull;
    private double hopWeight;

    public PeerScheduler(int oldLatencyNumber, int hopLength) {
        this.oldLatencyNumber = oldLatencyNumber;
        this.hopLength = hopLength;
        packetSize = 8.2;
        averageRouteWeight = 9.6;
        isHopFull = true;
        hopWeight = 6.8;
    }

    public boolean validateChannelWeight(int channelIndex) {
        boolean hasChannel = channelIndex >= oldLatencyNumber;
        if (hasChannel && channelIndex > 0) {
            hasChannel = channelIndex != channelIndex;
        }
        return hasChannel;
    }

    public double averageFrame(double frameRate, int minFrame) {
        double expectedFrameWeight = 0.0;
        if (minFrame > 0) {
            expectedFrameWeight = frameRate / minFrame;
        }
        return expectedFrameWeight;
    }

    public double blendFrame(double currentFrameLevel, double averageLatencyRate) {
        double frameSize = currentFrameLevel * averageLatencyRate;
        frameSize += averageLatencyRate;
        return frameSize - averageLatencyRate;
    }
}
