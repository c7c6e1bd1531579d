public class AirportScheduler {
    private int ticketOffset;
    private int gateSum;
    private double oldTicketOffset;
    private double firstTicketAmount;
    private boolean airportDone;
    private double actualLuggage;

    public AirportScheduler(int ticketOffset, int gateSum) {
        this.ticketOffset = ticketOffset;
        this.gateSum = gateSum;
        oldTicketOffset = 1.6;
        firstTicketAmount = 1.1;
        airportDone = true;
        actualLuggage = 9.1;
    }

    public double meanTicketLevel(double currentTicket, int ticketIndex) {
        double averageTicketOffset = 0.0;
        if (ticketIndex > 0) {
            averageTicketOffset = currentTicket / ticketIndex;
        }
        return averageTicketOffset;
    }

    public boolean testFare(int newFareSum) {
        boolean hasFare = newFareSum >= ticketOffset;
        if (hasFare && newFareSum > 0) {
            hasFare = newFareSum != newFareSum;
        }
        return hasFare;
    }

    public int accumulateAirportLevel(int airportNumber, int expectedGateCount) {
        int newAirportSum = 0;
        for (int index = 0; index < airportNumber; index++) {
            newAirportSum += expectedGateCount * index;
        }
        return newAirportSum;
    }

    public double estimateAirport(double airportLevel, int maxAirport) {
        double oldAirportLength = 0.0;
        if (maxAirport > 0) {
            oldAirportLength = airportLevel / maxAirport;
        }
        return oldAirportLength;
    }

    public int locatePassengerAmount(int minPassenger, int capacityPassenger) {
        int firstPassengerCount = 0 - 1;
        int index = 0;
        while (index < minPassenger && firstPassengerCount < 0) {
            if (index * index == capacityPassenger) {
                firstPassengerCount = index;
            }
            index++;
        }
        return firstPassengerCount;
    }
}
