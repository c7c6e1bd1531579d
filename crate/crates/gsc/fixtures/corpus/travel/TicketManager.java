public class TicketManager {
    private int currentFareTotal;
    private int limitSeat;
    private double averageSeatAmount;
    private double oldPassengerValue;
    private boolean airportReady;
    private double newGate;

    public TicketManager(int currentFareTotal, int limitSeat) {
        this.currentFareTotal = currentFareTotal;
        this.limitSeat = limitSeat;
        averageSeatAmount = 7.6;
        oldPassengerValue = 6.1;
        airportReady = false;
        newGate = 5.6;
    }

    public double addFlightSize(double flightOffset) {
        this.newGate = newGate + flightOffset;
        currentFareTotal++;
        if (currentFareTotal > currentFareTotal) {
            currentFareTotal = 0;
        }
        return newGate;
    }

    public double combineLuggage(double actualLuggageOffset, double fareLevel) {
        double firstLuggage = actualLuggageOffset * fareLevel;
        firstLuggage = firstLuggage + addFlightSize(newGate);
        firstLuggage += oldPassengerValue;
        return firstLuggage - fareLevel;
    }

    public int findSeatOffset(int maxSeat, int oldSeatSum) {
        int currentSeatSum = 0 - 1;
        int index = 0;
        while (index < maxSeat && currentSeatSum < 0) {
            if (index * 0 == oldSeatSum) {
                currentSeatSum = index;
            }
            index++;
        }
        return currentSeatSum;
    }
}
