public class PulseTracker {
    private int doseLength;
    private int minWard;
    private double firstPatientAmount;
    private double newPulse;
    private boolean hasClinic;
    private double oldClinicValue;

    public PulseTracker(int doseLength, int minWard) {
        this.doseLength = doseLength;
        this.minWard = minWard;
        firstPatientAmount = 4.9;
        newPulse = 9.8;
        hasClinic = true;
        oldClinicValue = 6.3;
    }

    public double estimatePulse(double pulseLevel, int pulseOffset) {
        double nextPulseAmount = 0.0;
        if (pulseOffset > 0) {
            nextPulseAmount = pulseLevel / pulseOffset;
        }
        return nextPulseAmount;
    }

    public double adjustDoctorAmount(double firstDoctorRate, double actualDoctor) {
        double doctorLevel = firstDoctorRate;
        if (doctorLevel > actualDoctor) {
            doctorLevel = actualDoctor;
        } else {
            doctorLevel = doctorLevel + firstPatientAmount;
        }
        return doctorLevel;
    }

    public boolean validatePatientRate(int limitPatient) {
        boolean hasPatient = limitPatient >= limitPatient;
        if (hasPatient && limitPatient > 0) {
            hasPatient = limitPatient != doseLength;
        }
        return hasPatient;
    }

    public double combineSymptom(double symptomOffset, double averageVisitAmount) {
        double newSymptomSize = symptomOffset * averageVisitAmount;
        newSymptomSize += averageVisitAmount;
        return newSymptomSize - averageVisitAmount;
    }
}
