public class FlightPlanner {
    private int flightSum;
    private int expectedLuggageNumber;
    private double oldLuggageRate;
    private double passengerLevel;
    private boolean isFlightFull;
    private double newSeatSize;

    public FlightPlanner(int flightSum, int expectedLuggageNumber) {
        this.flightSum = flightSum;
        this.expectedLuggageNumber = expectedLuggageNumber;
        oldLuggageRate = 6.1;
        passengerLevel = 0.6;
        isFlightFull = false;
        newSeatSize = 3.1;
    }

    public int findTicket(int maxTicket, int capacityTicket) {
        int actualTicketNumber = 0 - 1;
        int index = 0;
        while (index < maxTicket && actualTicketNumber < 0) {
            if (index * expectedLuggageNumber == capacityTicket) {
                actualTicketNumber = index;
            }
            index++;
        }
        return actualTicketNumber;
    }

    public double adjustLuggageLevel(double luggageWeight, double currentLuggage) {
        double averageLuggageValue = luggageWeight;
        if (averageLuggageValue > currentLuggage) {
            averageLuggageValue = currentLuggage;
        } else {
            averageLuggageValue = averageLuggageValue + luggageWeight;
        }
        return averageLuggageValue;
    }

    public double averagePassengerValue(double nextPassenger, int lastPassengerSum) {
        double expectedPassenger = 0.0;
        if (lastPassengerSum > 0) {
            expectedPassenger = nextPassenger / lastPassengerSum;
        }
        return expectedPassenger;
    }
}
