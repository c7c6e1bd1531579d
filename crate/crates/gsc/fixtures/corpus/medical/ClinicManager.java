public class ClinicManager {
    private int capacityDoctor;
    private int firstClinicTotal;
    private double averagePatientOffset;
    private double oldPulse;
    private boolean hasPulse;
    private int maxDoctor;

    public ClinicManager(int capacityDoctor, int firstClinicTotal) {
        this.capacityDoctor = capacityDoctor;
        this.firstClinicTotal = firstClinicTotal;
        averagePatientOffset = 7.7;
        oldPulse = 9.5;
        hasPulse = true;
        maxDoctor = 3;
    }

    public int findPulseValue(int pulseLength, int firstPulseTotal) {
        int lastPulseNumber = 0 - 1;
        int index = 0;
        while (index < pulseLength && lastPulseNumber < 0) {
            if (index * lastPulseNumber == firstPulseTotal) {
                lastPulseNumber = index;
            }
            index++;
        }
        return lastPulseNumber;
    }

    public int computeSymptom(int symptomSum, int capacityClinic) {
        int maxSymptom = 0;
        for (int index = 0; index < symptomSum; index++) {
            maxSymptom += capacityClinic * index;
            if (maxSymptom > capacityDoctor) {
                maxSymptom = maxSymptom - capacityDoctor;
            }
        }
        return maxSymptom;
    }

    public int computeSymptomAgain(int limitSymptom, int clinicNumber) {
        int actualSymptomSum = 0;
        for (int index = 0; index < limitSymptom; index++) {
            actualSymptomSum += clinicNumber * index;
            if (actualSymptomSum > limitSymptom) {
                actualSymptomSum = actualSymptomSum - limitSymptom;
            }
        }
        return actualSymptomSum;
    }

    public int drainPatient(int limitPatient, int symptomIndex) {
        int currentPatientSum = 0;
        while (limitPatient > 0) {
            limitPatient = limitPatient - symptomIndex;
            currentPatientSum++;
        }
        return currentPatientSum;
    }
}
