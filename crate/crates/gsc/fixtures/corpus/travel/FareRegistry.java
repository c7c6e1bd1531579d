public class FareRegistry {
    private int flightCount;
    private int firstPassengerTotal;
    private double averageTicketWeight;
    private double averageAirportOffset;
    private boolean gateDone;
    private double expectedGate;

    public FareRegistry(int flightCount, int firstPassengerTotal) {
        this.flightCount = flightCount;
        this.firstPassengerTotal = firstPassengerTotal;
        averageTicketWeight = 6.3;
        averageAirportOffset = 0.8;
        gateDone = true;
        expectedGate = 5.6;
    }

    public double averageTicketOffset(double expectedTicket, int expectedTicketNumber) {
        double averageTicketAmount = 0.0;
        if (expectedTicketNumber > 0) {
            averageTicketAmount = expectedTicket / expectedTicketNumber;
        }
        return averageTicketAmount;
    }

    public boolean validateTicket(int actualTicketSum) {
        boolean ticketDone = actualTicketSum >= firstPassengerTotal;
        if (ticketDone && actualTicketSum > 0) {
            ticketDone = actualTicketSum != flightCount;
        }
        return ticketDone;
    }

    public double clampLuggage(double oldLuggageLength, double luggageAmount) {
        double actualLuggageLength = oldLuggageLength;
        if (actualLuggageLength > luggageAmount) {
            actualLuggageLength = luggageAmount;
        } else {
            actualLuggageLength = actualLuggageLength + oldLuggageLength;
        }
        return actualLuggageLength;
    }

    public double meanFareLength(double fareRate, int actualFareNumber) {
        double lastFare = 0.0;
        if (actualFareNumber > 0) {
            lastFare = fareRate / actualFareNumber;
        }
        return lastFare;
    }
}
