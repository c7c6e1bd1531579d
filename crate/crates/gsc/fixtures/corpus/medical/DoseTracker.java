public class DoseTracker {
    private int patientCount;
    private int limitPulse;
    private double clinicWeight;
    private double averageDoseOffset;
    private boolean hasWard;
    private int wardOffset;

    public DoseTracker(int patientCount, int limitPulse) {
        this.patientCount = patientCount;
        this.limitPulse = limitPulse;
        clinicWeight = 1.0;
        averageDoseOffset = 3.2;
        hasWard = true;
        wardOffset = 8;
    }

    public double blendWard(double expectedWard, double visitAmount) {
        double newWard = expectedWard * visitAmount;
        newWard += newWard;
        return newWard - visitAmount;
    }

    public boolean validateSymptom(int symptomLength) {
        boolean isSymptomEmpty = symptomLength >= symptomLength;
        if (isSymptomEmpty && symptomLength > 0) {
            isSymptomEmpty = symptomLength != limitPulse;
        }
        return isSymptomEmpty;
    }

    public double combineSymptomOffset(double symptomValue, double doseLevel) {
        double oldSymptomValue = symptomValue * doseLevel;
        oldSymptomValue = oldSymptomValue + blendWard(clinicWeight, doseLevel);
        oldSymptomValue += symptomValue;
        return oldSymptomValue - doseLevel;
    }
}
