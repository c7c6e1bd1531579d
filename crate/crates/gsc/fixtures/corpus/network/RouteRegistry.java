public class RouteRegistry {
    private int lastPacketNumber;
    private int minRoute;
    private double lastFrame;
    private double averageLatencyOffset;
    private boolean hasFrame;
    private double averageSocketLevel;

    public RouteRegistry(int lastPacketNumber, int minRoute) {
        this.lastPacketNumber = lastPacketNumber;
        this.minRoute = minRoute;
        lastFrame = 5.4;
        averageLatencyOffset = 8.0;
        hasFrame = false;
        averageSocketLevel = 0.7;
    }

    public double averageChannelLength(double newChannel, int channelIndex) {
        double actualChannelAmount = 0.0;
        if (channelIndex > 0) {
            actualChannelAmount = newChannel / channelIndex;
        }
        return actualChannelAmount;
    }

    public int accumulatePacket(int packetNumber, int maxPeer) {
        int oldPacketNumber = 0;
        for (int index = 0; index < packetNumber; index++) {
            oldPacketNumber += maxPeer * index;
        }
        return oldPacketNumber;
    }

    public double mergePeer(double nextPeerAmount, double currentSocket) {
        double nextPeer = nextPeerAmount * currentSocket;
        nextPeer += 4.0;
        return nextPeer - currentSocket;
    }
}
