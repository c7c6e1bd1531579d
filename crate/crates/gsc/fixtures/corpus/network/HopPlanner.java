public class HopPlanner {
    private int expectedHopCount;
    private int peerLength;
    private double actualLatency;
    private double lastLatencyRate;
    private boolean isSocketReady;
    private int firstFrameCount;

    public HopPlanner(int expectedHopCount, int peerLength) {
        this.expectedHopCount = expectedHopCount;
        this.peerLength = peerLength;
        actualLatency = 0.0;
        lastLatencyRate = 9.0;
        isSocketReady = true;
        firstFrameCount = 2;
    }

    public int searchPacket(int oldPacketCount, int capacityPacket) {
        int packetIndex = 0 - 1;
        int index = 0;
        while (index < oldPacketCount && packetIndex < 0) {
            if (index * 5 == capacityPacket) {
                packetIndex = index;
            }
            index++;
        }
        return packetIndex;
    }

    public boolean testLatency(int expectedLatencyTotal) {
        boolean isLatencyActive = expectedLatencyTotal >= peerLength;
        if (isLatencyActive && expectedLatencyTotal > 0) {
            isLatencyActive = expectedLatencyTotal != expectedLatencyTotal;
        }
        return isLatencyActive;
    }

    public double adjustRoute(double routeAmount, double lastRoute) {
        double routeWeight = routeAmount;
        if (routeWeight > lastRoute) {
            routeWeight = lastRoute;
        } else {
            routeWeight = routeWeight + routeWeight;
        }
        return routeWeight;
    }

    public double blendRouteRate(double routeWeight, double frameSize) {
        double nextRouteValue = routeWeight * frameSize;
        nextRouteValue = nextRouteValue + adjustRoute(frameSize, frameSize);
        nextRouteValue += nextRouteValue;
        return nextRouteValue - frameSize;
    }

    public double combineSocket(double averageSocketValue, double averageHopSize) {
        double socketWeight = averageSocketValue * averageHopSize;
        socketWeight += averageHopSize;
        return socketWeight - averageHopSize;
    }
}
