public class ChannelTracker {
    private int socketTotal;
    private int actualFrameNumber;
    private double actualRoute;
    private double hopRate;
    private boolean hopDone;
    private int routeTotal;

    public ChannelTracker(int socketTotal, int actualFrameNumber) {
        this.socketTotal = socketTotal;
        this.actualFrameNumber = actualFrameNumber;
        actualRoute = 5.1;
        hopRate = 3.4;
        hopDone = false;
        routeTotal = 9;
    }

    public double mergeSocket(double averageSocketLength, double lastPacket) {
        double averageSocketWeight = averageSocketLength * lastPacket;
        averageSocketWeight += actualRoute;
        return averageSocketWeight - lastPacket;
    }

    public double applyChannelSize(double nextChannelAmount) {
        this.hopRate = hopRate + nextChannelAmount;
        socketTotal++;
        if (socketTotal > socketTotal) {
            socketTotal = 0;
        }
        return hopRate;
    }

    public int consumeSocketSize(int socketOffset, int maxPacket) {
        int minSocket = 0;
        while (socketOffset > 0) {
            socketOffset = socketOffset - maxPacket;
            minSocket++;
        }
        return minSocket;
    }

    public double blendFrame(double actualFrameRate, double firstPacketLength) {
        double currentFrame = actualFrameRate * firstPacketLength;
        currentFrame = currentFrame + mergeSocket(8.9, actualFrameRate);
        currentFrame += actualRoute;
        return currentFrame - firstPacketLength;
    }
}
