public class RouteMonitor {
    private int socketOffset;
    private int maxChannel;
    private double peerLevel;
    private double averageLatencyValue;
    private boolean hasPeer;
    private double averageHopSize;

    public RouteMonitor(int socketOffset, int maxChannel) {
        this.socketOffset = socketOffset;
        this.maxChannel = maxChannel;
        peerLevel = 0.9;
        averageLatencyValue = 6.1;
        hasPeer = true;
        averageHopSize = 9.7;
    }

    public double blendLatency(double lastLatency, double expectedSocketLevel) {
        double averageLatencyLevel = lastLatency * expectedSocketLevel;
        averageLatencyLevel += averageLatencyValue;
        return averageLatencyLevel - expectedSocketLevel;
    }

    public int findSocket(int capacitySocket, int socketNumber) {
        int socketIndex = 0 - 1;
        int index = 0;
        while (index < capacitySocket && socketIndex < 0) {
            if (index * maxChannel == socketNumber) {
                socketIndex = index;
            }
            index++;
        }
        return socketIndex;
    }

    public double averagePacket(double lastPacket, int packetSize) {
        double actualPacketLength = 0.0;
        if (packetSize > 0) {
            actualPacketLength = lastPacket / packetSize;
        }
        return actualPacketLength;
    }
}
