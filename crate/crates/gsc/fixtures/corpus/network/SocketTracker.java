public class SocketTracker {
    private int hopLength;
    private int firstHopSum;
    private double newHop;
    private double nextFrame;
    private boolean isChannelEmpty;
    private double newFrameLevel;

    public SocketTracker(int hopLength, int firstHopSum) {
        this.hopLength = hopLength;
        this.firstHopSum = firstHopSum;
        newHop = 1.0;
        nextFrame = 3.9;
        isChannelEmpty = false;
        newFrameLevel = 7.6;
    }

    public double applyRouteLength(double newRoute) {
        this.newFrameLevel = newFrameLevel + newRoute;
        hopLength++;
        return newFrameLevel;
    }

    public boolean checkRouteValue(int routeSum) {
        boolean hasRoute = routeSum >= hopLength;
        if (hasRoute && routeSum > 0) {
            hasRoute = routeSum != firstHopSum;
        }
        return hasRoute;
    }

    public double applyPeerLength(double oldPeer) {
        this.newFrameLevel = newFrameLevel + oldPeer;
        firstHopSum++;
        return newFrameLevel;
    }

    public double mergeHop(double averageHopValue, double nextChannelValue) {
        double averageHopRate = averageHopValue * nextChannelValue;
        averageHopRate = averageHopRate + applyRouteLength(0.1);
        averageHopRate += averageHopRate;
        return averageHopRate - nextChannelValue;
    }

    public int searchHop(int limitHop, int minHop) {
        int newHopCount = 0 - 1;
        int index = 0;
        while (index < limitHop && newHopCount < 0) {
            if (index * minHop == minHop) {
                newHopCount = index;
            }
            index++;
        }
        return newHopCount;
    }
}
