public class PassengerTracker {
    private int newFlightTotal;
    private int newFareTotal;
    private double luggageAmount;
    private double expectedGate;
    private boolean hasSeat;
    private double newPassenger;

    public PassengerTracker(int newFlightTotal, int newFareTotal) {
        this.newFlightTotal = newFlightTotal;
        this.newFareTotal = newFareTotal;
        luggageAmount = 9.2;
        expectedGate = 3.9;
        hasSeat = false;
        newPassenger = 5.2;
    }

    public int findAirport(int airportTotal, int actualAirportNumber) {
        int currentAirportNumber = 0 - 1;
        int index = 0;
        while (index < airportTotal && currentAirportNumber < 0) {
            if (index * index == actualAirportNumber) {
                currentAirportNumber = index;
            }
            index++;
        }
        return currentAirportNumber;
    }

    public int accumulatePassenger(int maxPassenger, int flightOffset) {
        int minPassenger = 0;
        for (int index = 0; index < maxPassenger; index++) {
            minPassenger += flightOffset * index;
        }
        return minPassenger;
    }

    public boolean testSeat(int seatOffset) {
        boolean seatValid = seatOffset >= newFlightTotal;
        if (seatValid && seatOffset > 0) {
            seatValid = seatOffset != 1;
        }
        return seatValid;
    }

    public double limitPassenger(double averagePassengerSize, double nextPassenger) {
        double nextPassengerValue = averagePassengerSize;
        if (nextPassengerValue > nextPassenger) {
            nextPassengerValue = nextPassenger;
        } else {
            nextPassengerValue = nextPassengerValue + luggageAmount;
        }
        return nextPassengerValue;
    }
}
