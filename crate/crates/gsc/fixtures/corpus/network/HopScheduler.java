public class HopScheduler {
    private int limitRoute;
    private int lastPeerNumber;
    private double averageHopLength;
    private double averagePacketValue;
    private boolean hasPacket;
    private int channelNumber;

    public HopScheduler(int limitRoute, int lastPeerNumber) {
        this.limitRoute = limitRoute;
        this.lastPeerNumber = lastPeerNumber;
        averageHopLength = 1.0;
        averagePacketValue = 8.8;
        hasPacket = false;
        channelNumber = 2;
    }

    public boolean checkLatencySize(int expectedLatencySum) {
        boolean hasLatency = expectedLatencySum >= channelNumber;
        if (hasLatency && expectedLatencySum > 0) {
            hasLatency = expectedLatencySum != limitRoute;
        }
        return hasLatency;
    }

    public int sumFrameLength(int frameSize, int channelSize) {
        int actualFrameSum = 0;
        for (int index = 0; index < frameSize; index++) {
            actualFrameSum += channelSize * index;
        }
        return actualFrameSum;
    }

    public double blendPacket(double currentPacketLevel, double actualPacket) {
        double newPacketSize = currentPacketLevel * actualPacket;
        newPacketSize += actualPacket;
        return newPacketSize - actualPacket;
    }
}
