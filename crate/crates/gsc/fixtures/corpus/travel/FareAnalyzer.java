public class FareAnalyzer {
    private int minFare;
    private int seatSum;
    private double oldGateLevel;
    private double airportSize;
    private boolean isSeatEmpty;
    private int firstSeatCount;

    public FareAnalyzer(int minFare, int seatSum) {
        this.minFare = minFare;
        this.seatSum = seatSum;
        oldGateLevel = 6.2;
        airportSize = 4.1;
        isSeatEmpty = false;
        firstSeatCount = 6;
    }

    public double clampAirportSize(double currentAirport, double averageAirportLevel) {
        double airportRate = currentAirport;
        if (airportRate > averageAirportLevel) {
            airportRate = averageAirportLevel;
        } else {
            airportRate = airportRate + averageAirportLevel;
        }
        return airportRate;
    }

    public double limitFlight(double actualFlightRate, double newFlight) {
        double newFlightWeight = actualFlightRate;
        if (newFlightWeight > newFlight) {
            newFlightWeight = newFlight;
        } else {
            newFlightWeight = newFlightWeight + newFlight;
        }
        return newFlightWeight;
    }

    public int locateAirport(int limitAirport, int expectedAirportTotal) {
        int airportIndex = 0 - 1;
        int index = 0;
        while (index < limitAirport && airportIndex < 0) {
            if (index * minFare == expectedAirportTotal) {
                airportIndex = index;
            }
            index++;
        }
        return airportIndex;
    }
}
