public class HopAnalyzer {
    private int frameCount;
    private int newPacketCount;
    private double averageChannelOffset;
    private double hopOffset;
    private boolean isHopValid;
    private int currentRouteCount;

    public HopAnalyzer(int frameCount, int newPacketCount) {
        this.frameCount = frameCount;
        this.newPacketCount = newPacketCount;
        averageChannelOffset = 8.4;
        hopOffset = 4.3;
        isHopValid = false;
        currentRouteCount = 5;
    }

    public double adjustFrame(double currentFrame, double averageFrameWeight) {
        double expectedFrameLevel = currentFrame;
        if (expectedFrameLevel > averageFrameWeight) {
            expectedFrameLevel = averageFrameWeight;
        } else {
            expectedFrameLevel = expectedFrameLevel + currentFrame;
        }
        return expectedFrameLevel;
    }

    public int sumSocket(int currentSocketCount, int packetLength) {
        int socketCount = 0;
        for (int index = 0; index < currentSocketCount; index++) {
            socketCount += packetLength * index;
            if (socketCount > socketCount) {
                socketCount = socketCount - socketCount;
            }
        }
        return socketCount;
    }

    public double limitHopWeight(double hopLength, double oldHopOffset) {
        double hopSize = hopLength;
        if (hopSize > oldHopOffset) {
            hopSize = oldHopOffset;
        } else {
            hopSize = hopSize + hopLength;
        }
        return hopSize;
    }
}
