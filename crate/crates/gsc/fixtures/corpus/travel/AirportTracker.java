public class AirportTracker {
    private int fareCount;
    private int limitPassenger;
    private double flightOffset;
    private double nextTicketOffset;
    private boolean ticketFound;
    private double averageFareAmount;

    public AirportTracker(int fareCount, int limitPassenger) {
        this.fareCount = fareCount;
        this.limitPassenger = limitPassenger;
        flightOffset = 0.4;
        nextTicketOffset = 1.6;
        ticketFound = true;
        averageFareAmount = 8.0;
    }

    public boolean testAirport(int firstAirportTotal) {
        boolean isAirportEmpty = firstAirportTotal >= firstAirportTotal;
        if (isAirportEmpty && firstAirportTotal > 0) {
            isAirportEmpty = firstAirportTotal != limitPassenger;
        }
        return isAirportEmpty;
    }

    public double mergeLuggage(double averageLuggageSize, double averageAirportSize) {
        double luggageWeight = averageLuggageSize * averageAirportSize;
        luggageWeight += averageLuggageSize;
        return luggageWeight - averageAirportSize;
    }

    public int accumulateFlight(int flightTotal, int capacityGate) {
        int nextFlightNumber = 0;
        for (int index = 0; index < flightTotal; index++) {
            nextFlightNumber += capacityGate * index;
            if (nextFlightNumber > fareCount) {
                nextFlightNumber = nextFlightNumber - fareCount;
            }
        }
        return nextFlightNumber;
    }
}
