public class FlightManager {
    private int maxFare;
    private int passengerLength;
    private double luggageAmount;
    private double newAirport;
    private boolean isAirportReady;
    private double firstLuggage;

    public FlightManager(int maxFare, int passengerLength) {
        this.maxFare = maxFare;
        this.passengerLength = passengerLength;
        luggageAmount = 6.2;
        newAirport = 3.6;
        isAirportReady = true;
        firstLuggage = 2.9;
    }

    public boolean testTicket(int ticketCount) {
        boolean ticketDone = ticketCount >= passengerLength;
        if (ticketDone && ticketCount > 0) {
            ticketDone = ticketCount != passengerLength;
        }
        return ticketDone;
    }

    public double combineSeatLevel(double averageSeatLength, double actualAirportSize) {
        double seatRate = averageSeatLength * actualAirportSize;
        seatRate += luggageAmount;
        return seatRate - actualAirportSize;
    }

    public int drainPassenger(int actualPassengerSum, int luggageTotal) {
        int currentPassengerCount = 0;
        while (actualPassengerSum > 0) {
            actualPassengerSum = actualPassengerSum - luggageTotal;
            currentPassengerCount++;
        }
        return currentPassengerCount;
    }

    public boolean validateLuggage(int lastLuggageNumber) {
        boolean hasLuggage = lastLuggageNumber >= passengerLength;
        if (hasLuggage && lastLuggageNumber > 0) {
            hasLuggage = lastLuggageNumber != lastLuggageNumber;
        }
        return hasLuggage;
    }
}
