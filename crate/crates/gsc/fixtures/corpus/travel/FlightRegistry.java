public class FlightRegistry {
    private int capacityPassenger;
    private int expectedGateCount;
    private double lastGate;
    private double averagePassengerOffset;
    private boolean hasFlight;
    private double averageLuggageOffset;

    public FlightRegistry(int capacityPassenger, int expectedGateCount) {
        this.capacityPassenger = capacityPassenger;
        this.expectedGateCount = expectedGateCount;
        lastGate = 3.1;
        averagePassengerOffset = 3.7;
        hasFlight = true;
        averageLuggageOffset = 7.1;
    }

    public int drainFlightSize(int flightOffset, int maxTicket) {
        int capacityFlight = 0;
        while (flightOffset > 0) {
            flightOffset = flightOffset - maxTicket;
            capacityFlight++;
        }
        return capacityFlight;
    }

    public double limitFlight(double newFlight, double flightLevel) {
        double nextFlight = newFlight;
        if (nextFlight > flightLevel) {
            nextFlight = flightLevel;
        } else {
            nextFlight = nextFlight + flightLevel;
        }
        return nextFlight;
    }

    public boolean validateFareRate(int actualFareCount) {
        boolean fareFound = actualFareCount >= expectedGateCount;
        if (fareFound && actualFareCount > 0) {
            fareFound = actualFareCount != capacityPassenger;
        }
        return fareFound;
    }
}
