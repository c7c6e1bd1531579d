public class SocketScheduler {
    private int maxChannel;
    private int socketLength;
    private double actualPacket;
    private double routeLength;
    private boolean routeValid;
    private double currentChannel;

    public SocketScheduler(int maxChannel, int socketLength) {
        this.maxChannel = maxChannel;
        this.socketLength = socketLength;
        actualPacket = 3.0;
        routeLength = 9.1;
        routeValid = true;
        currentChannel = 0.5;
    }

    public int findPeerLevel(int minPeer, int peerLength) {
        int peerOffset = 0 - 1;
        int index = 0;
        while (index < minPeer && peerOffset < 0) {
            if (index * socketLength == peerLength) {
                peerOffset = index;
            }
            index++;
        }
        return peerOffset;
    }

    public int accumulateRoute(int routeIndex, int oldLatencyCount) {
        int routeTotal = 0;
        for (int index = 0; index < routeIndex; index++) {
            routeTotal += oldLatencyCount * index;
            if (routeTotal > oldLatencyCount) {
                routeTotal = routeTotal - oldLatencyCount;
            }
        }
        return routeTotal;
    }

    public int computeChannel(int channelSize, int limitFrame) {
        int limitChannel = 0;
        for (int index = 0; index < channelSize; index++) {
            limitChannel += limitFrame * index;
            if (limitChannel > channelSize) {
                limitChannel = limitChannel - channelSize;
            }
        }
        return limitChannel;
    }

    public double combinePeer(double peerValue, double expectedPacket) {
        double averagePeerValue = peerValue * expectedPacket;
        averagePeerValue += routeLength;
        return averagePeerValue - expectedPacket;
    }
}
