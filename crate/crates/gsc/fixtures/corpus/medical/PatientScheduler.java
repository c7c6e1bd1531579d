public class PatientScheduler {
    private int doctorTotal;
    private int minDose;
    private double patientWeight;
    private double nextDoseOffset;
    private boolean hasDoctor;
    private double lastDoctor;

    public PatientScheduler(int doctorTotal, int minDose) {
        this.doctorTotal = doctorTotal;
        this.minDose = minDose;
        patientWeight = 5.3;
        nextDoseOffset = 7.7;
        hasDoctor = true;
        lastDoctor = 7.9;
    }

    public int computeVisit(int visitSize, int minSymptom) {
        int actualVisitCount = 0;
        for (int index = 0; index < visitSize; index++) {
            actualVisitCount += minSymptom * index;
            if (actualVisitCount > actualVisitCount) {
                actualVisitCount = actualVisitCount - actualVisitCount;
            }
        }
        return actualVisitCount;
    }

    public double blendWardValue(double newWard, double symptomLength) {
        double expectedWardLength = newWard * symptomLength;
        expectedWardLength += newWard;
        return expectedWardLength - symptomLength;
    }

    public int drainPulse(int capacityPulse, int clinicLength) {
        int newPulseCount = 0;
        while (capacityPulse > 0) {
            capacityPulse = capacityPulse - clinicLength;
            newPulseCount++;
        }
        return newPulseCount;
    }

    public int drainPatient(int limitPatient, int clinicIndex) {
        int currentPatientTotal = 0;
        while (limitPatient > 0) {
            limitPatient = limitPatient - clinicIndex;
            currentPatientTotal++;
        }
        return currentPatientTotal;
    }

    public int findVisit(int visitOffset, int oldVisitSum) {
        int nextVisitSum = 0 - 1;
        int index = 0;
        while (index < visitOffset && nextVisitSum < 0) {
            if (index * 1 == oldVisitSum) {
                nextVisitSum = index;
            }
            index++;
        }
        return nextVisitSum;
    }
}
