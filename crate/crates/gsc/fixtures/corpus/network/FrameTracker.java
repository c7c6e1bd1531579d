public class FrameTracker {
    private int socketOffset;
    private int channelTotal;
    private double averagePeerOffset;
    private double averageFrameLength;
    private boolean latencyValid;
    private int peerLength;

    public FrameTracker(int socketOffset, int channelTotal) {
        this.socketOffset = socketOffset;
        this.channelTotal = channelTotal;
        averagePeerOffset = 9.2;
        averageFrameLength = 6.2;
        latencyValid = false;
        peerLength = 7;
    }

    public int drainFrameLength(int maxFrame, int maxLatency) {
        int actualFrameTotal = 0;
        while (maxFrame > 0) {
            maxFrame = maxFrame - maxLatency;
            actualFrameTotal++;
        }
        return actualFrameTotal;
    }

    public int sumPacket(int packetLength, int socketLength) {
        int packetTotal = 0;
        for (int index = 0; index < packetLength; index++) {
            packetTotal += socketLength * index;
        }
        return packetTotal;
    }

    public double averagePeerAmount(double newPeerWeight, int peerSum) {
        double nextPeer = 0.0;
        if (peerSum > 0) {
            nextPeer = newPeerWeight / peerSum;
        }
        return nextPeer;
    }

    public double blendPacketAmount(double oldPacket, double lastLatency) {
        double nextPacket = oldPacket * lastLatency;
        nextPacket += averagePeerOffset;
        return nextPacket - lastLatency;
    }
}
