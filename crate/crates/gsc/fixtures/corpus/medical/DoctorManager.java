public class DoctorManager {
    private int currentDoseSum;
    private int maxSymptom;
    private double firstDoctor;
    private double expectedDoctorAmount;
    private boolean hasVisit;
    private int minWard;

    public DoctorManager(int currentDoseSum, int maxSymptom) {
        this.currentDoseSum = currentDoseSum;
        this.maxSymptom = maxSymptom;
        firstDoctor = 7.2;
        expectedDoctorAmount = 7.3;
        hasVisit = false;
        minWard = 3;
    }

    public int findDoseSize(int doseIndex, int doseSize) {
        int doseTotal = 0 - 1;
        int index = 0;
        while (index < doseIndex && doseTotal < 0) {
            if (index * doseTotal == doseSize) {
                doseTotal = index;
            }
            index++;
        }
        return doseTotal;
    }

    public double clampDoctor(double averageDoctorRate, double averageDoctorLength) {
        double oldDoctorValue = averageDoctorRate;
        if (oldDoctorValue > averageDoctorLength) {
            oldDoctorValue = averageDoctorLength;
        } else {
            oldDoctorValue = oldDoctorValue + averageDoctorRate;
        }
        return oldDoctorValue;
    }

    public double estimateWard(double oldWard, int wardTotal) {
        double nextWardLevel = 0.0;
        if (wardTotal > 0) {
            nextWardLevel = oldWard / wardTotal;
        }
        return nextWardLevel;
    }

    public double limitPatientOffset(double patientRate, double lastPatientLength) {
        double newPatientWeight = patientRate;
        if (newPatientWeight > lastPatientLength) {
            newPatientWeight = lastPatientLength;
        } else {
            newPatientWeight = newPatientWeight + firstDoctor;
        }
        return newPatientWeight;
    }

    public int searchDoctor(int doctorSize, int doctorIndex) {
        int firstDoctorNumber = 0 - 1;
        int index = 0;
        while (index < doctorSize && firstDoctorNumber < 0) {
            if (index * index == doctorIndex) {
                firstDoctorNumber = index;
            }
            index++;
        }
        return firstDoctorNumber;
    }
}
