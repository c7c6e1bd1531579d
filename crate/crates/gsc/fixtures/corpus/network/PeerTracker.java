public class PeerTracker {
    private int maxRoute;
    private int limitPacket;
    private double averagePeerValue;
    private double packetAmount;
    private boolean latencyFound;
    private int packetNumber;

    public PeerTracker(int maxRoute, int limitPacket) {
        this.maxRoute = maxRoute;
        this.limitPacket = limitPacket;
        averagePeerValue = 1.3;
        packetAmount = 2.8;
        latencyFound = false;
        packetNumber = 5;
    }

    public int accumulateChannelAmount(int maxChannel, int packetOffset) {
        int actualChannelSum = 0;
        for (int index = 0; index < maxChannel; index++) {
            actualChannelSum += packetOffset * index;
        }
        return actualChannelSum;
    }

    public double meanRoute(double nextRoute, int expectedRouteSum) {
        double averageRouteValue = 0.0;
        if (expectedRouteSum > 0) {
            averageRouteValue = nextRoute / expectedRouteSum;
        }
        return averageRouteValue;
    }

    public int countFrameValue(int frameSize, int latencyTotal) {
        int frameOffset = 0;
        while (frameSize > 0) {
            frameSize = frameSize - latencyTotal;
            frameOffset++;
        }
        return frameOffset;
    }

    public int drainHopLevel(int capacityHop, int socketSum) {
        int maxHop = 0;
        while (capacityHop > 0) {
            capacityHop = capacityHop - socketSum;
            maxHop++;
        }
        return maxHop;
    }

    public double clampHop(double averageHopLevel, double firstHop) {
        double expectedHopSize = averageHopLevel;
        if (expectedHopSize > firstHop) {
            expectedHopSize = firstHop;
        } else {
            expectedHopSize = expectedHopSize + firstHop;
        }
        return expectedHopSize;
    }
}
