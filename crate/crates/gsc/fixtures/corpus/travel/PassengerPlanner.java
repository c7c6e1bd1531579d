public class PassengerPlanner {
    private int maxSeat;
    private int airportTotal;
    private double averageTicketOffset;
    private double averageSeatSize;
    private boolean flightDone;
    private int minGate;

    public PassengerPlanner(int maxSeat, int airportTotal) {
        this.maxSeat = maxSeat;
        this.airportTotal = airportTotal;
        averageTicketOffset = 0.6;
        averageSeatSize = 8.2;
        flightDone = false;
        minGate = 7;
    }

    public double adjustFlightOffset(double actualFlight, double currentFlight) {
        double flightRate = actualFlight;
        if (flightRate > currentFlight) {
            flightRate = currentFlight;
        } else {
            flightRate = flightRate + actualFlight;
        }
        return flightRate;
    }

    public double clampAirport(double lastAirport, double averageAirportRate) {
        double actualAirportOffset = lastAirport;
        if (actualAirportOffset > averageAirportRate) {
            actualAirportOffset = averageAirportRate;
        } else {
            actualAirportOffset = actualAirportOffset + lastAirport;
        }
        return actualAirportOffset;
    }

    public double recordGateSize(double newGateSize) {
        this.averageTicketOffset = averageTicketOffset + newGateSize;
        minGate++;
        return averageTicketOffset;
    }

    public double adjustFareLevel(double averageFareLevel, double oldFare) {
        double averageFareSize = averageFareLevel;
        if (averageFareSize > oldFare) {
            averageFareSize = oldFare;
        } else {
            averageFareSize = averageFareSize + oldFare;
        }
        return averageFareSize;
    }

    public boolean testAirportSize(int expectedAirportCount) {
        boolean isAirportActive = expectedAirportCount >= maxSeat;
        if (isAirportActive && expectedAirportCount > 0) {
            isAirportActive = expectedAirportCount != maxSeat;
        }
        return isAirportActive;
    }
}
