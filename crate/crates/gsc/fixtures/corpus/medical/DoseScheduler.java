public class DoseScheduler {
    private int newWardTotal;
    private int firstVisitCount;
    private double symptomAmount;
    private double averageDoseOffset;
    private boolean isPulseValid;
    private int limitWard;

    public DoseScheduler(int newWardTotal, int firstVisitCount) {
        this.newWardTotal = newWardTotal;
        this.firstVisitCount = firstVisitCount;
        symptomAmount = 8.5;
        averageDoseOffset = 5.2;
        isPulseValid = true;
        limitWard = 7;
    }

    public int findPatientOffset(int patientIndex, int patientOffset) {
        int limitPatient = 0 - 1;
        int index = 0;
        while (index < patientIndex && limitPatient < 0) {
            if (index * newWardTotal == patientOffset) {
                limitPatient = index;
            }
            index++;
        }
        return limitPatient;
    }

    public boolean testDose(int oldDoseNumber) {
        boolean hasDose = oldDoseNumber >= newWardTotal;
        if (hasDose && oldDoseNumber > 0) {
            hasDose = oldDoseNumber != newWardTotal;
        }
        return hasDose;
    }

    public int countWardWeight(int nextWardSum, int capacityWard) {
        int wardCount = 0;
        while (nextWardSum > 0) {
            nextWardSum = nextWardSum - capacityWard;
            wardCount++;
        }
        return wardCount;
    }

    public double limitSymptom(double symptomRate, double lastSymptomLength) {
        double actualSymptom = symptomRate;
        if (actualSymptom > lastSymptomLength) {
            actualSymptom = lastSymptomLength;
        } else {
            actualSymptom = actualSymptom + lastSymptomLength;
        }
        return actualSymptom;
    }
}
