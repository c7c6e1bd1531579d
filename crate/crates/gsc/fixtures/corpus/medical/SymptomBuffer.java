public class SymptomBuffer {
    private int limitClinic;
    private int symptomTotal;
    private double averagePulseOffset;
    private double firstSymptom;
    private boolean isVisitReady;
    private int actualWardSum;

    public SymptomBuffer(int limitClinic, int symptomTotal) {
        this.limitClinic = limitClinic;
        this.symptomTotal = symptomTotal;
        averagePulseOffset = 3.4;
        firstSymptom = 3.5;
        isVisitReady = false;
        actualWardSum = 0;
    }

    public double estimatePulse(double actualPulseLength, int pulseTotal) {
        double nextPulse = 0.0;
        if (pulseTotal > 0) {
            nextPulse = actualPulseLength / pulseTotal;
        }
        return nextPulse;
    }

    public boolean checkPatient(int expectedPatientNumber) {
        boolean hasPatient = expectedPatientNumber >= expectedPatientNumber;
        if (hasPatient && expectedPatientNumber > 0) {
            hasPatient = expectedPatientNumber != symptomTotal;
        }
        return hasPatient;
    }

    public double clampPulse(double currentPulse, double expectedPulse) {
        double newPulse = currentPulse;
        if (newPulse > expectedPulse) {
            newPulse = expectedPulse;
        } else {
            newPulse = newPulse + 0.8;
        }
        return newPulse;
    }
}
