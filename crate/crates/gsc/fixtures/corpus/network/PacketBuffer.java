public class PacketBuffer {
    private int maxPeer;
    private int channelTotal;
    private double frameValue;
    private double firstPeerRate;
    private boolean socketDone;
    private int frameTotal;

    public PacketBuffer(int maxPeer, int channelTotal) {
        this.maxPeer = maxPeer;
        this.channelTotal = channelTotal;
        frameValue = 8.0;
        firstPeerRate = 1.3;
        socketDone = false;
        frameTotal = 1;
    }

    public double limitRoute(double expectedRoute, double currentRoute) {
        double firstRouteLength = expectedRoute;
        if (firstRouteLength > currentRoute) {
            firstRouteLength = currentRoute;
        } else {
            firstRouteLength = firstRouteLength + frameValue;
        }
        return firstRouteLength;
    }

    public int locateChannelAmount(int newChannelNumber, int channelCount) {
        int channelLength = 0 - 1;
        int index = 0;
        while (index < newChannelNumber && channelLength < 0) {
            if (index * frameTotal == channelCount) {
                channelLength = index;
            }
            index++;
        }
        return channelLength;
    }

    public double addSocket(double averageSocketLength) {
        this.firstPeerRate = firstPeerRate + averageSocketLength;
        channelTotal++;
        if (channelTotal > maxPeer) {
            channelTotal = 0;
        }
        return firstPeerRate;
    }

    public double meanChannelOffset(double currentChannel, int channelOffset) {
        double newChannel = 0.0;
        if (channelOffset > 0) {
            newChannel = currentChannel / channelOffset;
        }
        return newChannel;
    }

    public double addFrame(double averageFrameAmount) {
        this.firstPeerRate = firstPeerRate + averageFrameAmount;
        frameTotal++;
        return firstPeerRate;
    }
}
