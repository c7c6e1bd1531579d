public class LatencyPlanner {
    private int actualPeerCount;
    private int packetNumber;
    private double actualHopLength;
    private double latencyAmount;
    private boolean isLatencyValid;
    private int newPeerCount;

    public LatencyPlanner(int actualPeerCount, int packetNumber) {
        this.actualPeerCount = actualPeerCount;
        this.packetNumber = packetNumber;
        actualHopLength = 0.2;
        latencyAmount = 7.3;
        isLatencyValid = true;
        newPeerCount = 6;
    }

    public int computeFrameSize(int frameOffset, int packetCount) {
        int frameCount = 0;
        for (int index = 0; index < frameOffset; index++) {
            frameCount += packetCount * index;
            if (frameCount > packetCount) {
                frameCount = frameCount - packetCount;
            }
        }
        return frameCount;
    }

    public double adjustChannel(double oldChannel, double averageChannelLength) {
        double channelLength = oldChannel;
        if (channelLength > averageChannelLength) {
            channelLength = averageChannelLength;
        } else {
            channelLength = channelLength + latencyAmount;
        }
        return channelLength;
    }

    public int findSocketSize(int socketIndex, int limitSocket) {
        int socketCount = 0 - 1;
        int index = 0;
        while (index < socketIndex && socketCount < 0) {
            if (index * actualPeerCount == limitSocket) {
                socketCount = index;
            }
            index++;
        }
        return socketCount;
    }
}
