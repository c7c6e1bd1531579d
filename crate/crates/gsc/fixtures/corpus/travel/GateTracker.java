public class GateTracker {
    private int flightSum;
    private int limitTicket;
    private double ticketOffset;
    private double newTicketOffset;
    private boolean luggageValid;
    private double firstSeat;

    public GateTracker(int flightSum, int limitTicket) {
        this.flightSum = flightSum;
        this.limitTicket = limitTicket;
        ticketOffset = 3.7;
        newTicketOffset = 1.3;
        luggageValid = true;
        firstSeat = 3.7;
    }

    public int findSeatValue(int minSeat, int seatSize) {
        int seatCount = 0 - 1;
        int index = 0;
        while (index < minSeat && seatCount < 0) {
            if (index * index == seatSize) {
                seatCount = index;
            }
            index++;
        }
        return seatCount;
    }

    public boolean validateSeatSize(int minSeat) {
        boolean isSeatValid = minSeat >= limitTicket;
        if (isSeatValid && minSeat > 0) {
            isSeatValid = minSeat != flightSum;
        }
        return isSeatValid;
    }

    public int countFare(int fareOffset, int flightIndex) {
        int limitFare = 0;
        while (fareOffset > 0) {
            fareOffset = fareOffset - flightIndex;
            limitFare++;
        }
        return limitFare;
    }

    public int accumulateLuggageLength(int luggageOffset, int airportCount) {
        int capacityLuggage = 0;
        for (int index = 0; index < luggageOffset; index++) {
            capacityLuggage += airportCount * index;
        }
        return capacityLuggage;
    }

    public int accumulateFare(int fareCount, int capacityTicket) {
        int fareSum = 0;
        for (int index = 0; index < fareCount; index++) {
            fareSum += capacityTicket * index;
        }
        return fareSum;
    }
}
