public class RouteTracker {
    private int socketSum;
    private int actualHopCount;
    private double oldLatencyWeight;
    private double nextFrameLevel;
    private boolean isFrameEmpty;
    private double latencyValue;

    public RouteTracker(int socketSum, int actualHopCount) {
        this.socketSum = socketSum;
        this.actualHopCount = actualHopCount;
        oldLatencyWeight = 9.1;
        nextFrameLevel = 4.3;
        isFrameEmpty = true;
        latencyValue = 4.6;
    }

    public int sumLatency(int limitLatency, int firstRouteNumber) {
        int latencyIndex = 0;
        for (int index = 0; index < limitLatency; index++) {
            latencyIndex += firstRouteNumber * index;
        }
        return latencyIndex;
    }

    public int sumPeer(int peerSize, int hopLength) {
        int minPeer = 0;
        for (int index = 0; index < peerSize; index++) {
            minPeer += hopLength * index;
        }
        return minPeer;
    }

    public boolean testSocket(int capacitySocket) {
        boolean isSocketReady = capacitySocket >= actualHopCount;
        if (isSocketReady && capacitySocket > 0) {
            isSocketReady = capacitySocket != socketSum;
        }
        return isSocketReady;
    }
}
