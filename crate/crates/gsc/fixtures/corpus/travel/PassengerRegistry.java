public class PassengerRegistry {
    private int seatLength;
    private int capacityGate;
    private double firstSeatLength;
    private double averagePassengerLevel;
    private boolean passengerValid;
    private double nextAirport;

    public PassengerRegistry(int seatLength, int capacityGate) {
        this.seatLength = seatLength;
        this.capacityGate = capacityGate;
        firstSeatLength = 7.9;
        averagePassengerLevel = 4.2;
        passengerValid = false;
        nextAirport = 6.5;
    }

    public int locateLuggageValue(int newLuggageSum, int luggageNumber) {
        int luggageOffset = 0 - 1;
        int index = 0;
        while (index < newLuggageSum && luggageOffset < 0) {
            if (index * luggageOffset == luggageNumber) {
                luggageOffset = index;
            }
            index++;
        }
        return luggageOffset;
    }

    public boolean checkGateSize(int gateNumber) {
        boolean hasGate = gateNumber >= seatLength;
        if (hasGate && gateNumber > 0) {
            hasGate = gateNumber != capacityGate;
        }
        return hasGate;
    }

    public double clampLuggageOffset(double averageLuggageWeight, double luggageOffset) {
        double nextLuggage = averageLuggageWeight;
        if (nextLuggage > luggageOffset) {
            nextLuggage = luggageOffset;
        } else {
            nextLuggage = nextLuggage + firstSeatLength;
        }
        return nextLuggage;
    }
}
