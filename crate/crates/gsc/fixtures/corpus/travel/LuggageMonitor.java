public class LuggageMonitor {
    private int luggageIndex;
    private int lastSeatTotal;
    private double newFlight;
    private double averageTicketValue;
    private boolean isLuggageValid;
    private int capacityLuggage;

    public LuggageMonitor(int luggageIndex, int lastSeatTotal) {
        this.luggageIndex = luggageIndex;
        this.lastSeatTotal = lastSeatTotal;
        newFlight = 1.9;
        averageTicketValue = 7.4;
        isLuggageValid = false;
        capacityLuggage = 0;
    }

    public int consumeGateRate(int gateTotal, int seatNumber) {
        int gateIndex = 0;
        while (gateTotal > 0) {
            gateTotal = gateTotal - seatNumber;
            gateIndex++;
        }
        return gateIndex;
    }

    public double applyPassengerLength(double nextPassenger) {
        this.averageTicketValue = averageTicketValue + nextPassenger;
        luggageIndex++;
        return averageTicketValue;
    }

    public double blendLuggage(double nextLuggage, double averageTicketLevel) {
        double averageLuggageWeight = nextLuggage * averageTicketLevel;
        averageLuggageWeight += 2.9;
        return averageLuggageWeight - averageTicketLevel;
    }

    public double applyTicket(double actualTicket) {
        this.newFlight = newFlight + actualTicket;
        luggageIndex++;
        return newFlight;
    }

    public double meanPassenger(double averagePassengerRate, int lastPassengerSum) {
        double actualPassenger = 0.0;
        if (lastPassengerSum > 0) {
            actualPassenger = averagePassengerRate / lastPassengerSum;
        }
        return actualPassenger;
    }
}
