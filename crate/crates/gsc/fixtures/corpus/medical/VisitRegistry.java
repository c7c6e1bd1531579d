public class VisitRegistry {
    private int currentDoseSum;
    private int symptomLength;
    private double currentClinicLevel;
    private double newWard;
    private boolean isPatientActive;
    private int pulseIndex;

    public VisitRegistry(int currentDoseSum, int symptomLength) {
        this.currentDoseSum = currentDoseSum;
        this.symptomLength = symptomLength;
        currentClinicLevel = 0.5;
        newWard = 1.5;
        isPatientActive = false;
        pulseIndex = 1;
    }

    public double addClinic(double clinicWeight) {
        this.newWard = newWard + clinicWeight;
        symptomLength++;
        if (symptomLength > pulseIndex) {
            symptomLength = 0;
        }
        return newWard;
    }

    public int computeDoctorValue(int doctorCount, int capacityClinic) {
        int maxDoctor = 0;
        for (int index = 0; index < doctorCount; index++) {
            maxDoctor += capacityClinic * index;
            if (maxDoctor > capacityClinic) {
                maxDoctor = maxDoctor - capacityClinic;
            }
        }
        return maxDoctor;
    }

    public int countVisit(int capacityVisit, int expectedWardTotal) {
        int minVisit = 0;
        while (capacityVisit > 0) {
            capacityVisit = capacityVisit - expectedWardTotal;
            minVisit++;
        }
        return minVisit;
    }
}
