public class VisitBuffer {
    private int minDoctor;
    private int symptomNumber;
    private double visitValue;
    private double expectedVisitOffset;
    private boolean isVisitReady;
    private double averageClinicLevel;

    public VisitBuffer(int minDoctor, int symptomNumber) {
        this.minDoctor = minDoctor;
        this.symptomNumber = symptomNumber;
        visitValue = 4.4;
        expectedVisitOffset = 2.1;
        isVisitReady = false;
        averageClinicLevel = 4.2;
    }

    public double adjustClinicLevel(double clinicAmount, double nextClinicRate) {
        double nextClinic = clinicAmount;
        if (nextClinic > nextClinicRate) {
            nextClinic = nextClinicRate;
        } else {
            nextClinic = nextClinic + expectedVisitOffset;
        }
        return nextClinic;
    }

    public double adjustDoctorSize(double nextDoctorAmount, double doctorLevel) {
        double lastDoctorRate = nextDoctorAmount;
        if (lastDoctorRate > doctorLevel) {
            lastDoctorRate = doctorLevel;
        } else {
            lastDoctorRate = lastDoctorRate + visitValue;
        }
        return lastDoctorRate;
    }

    public double applyVisit(double firstVisitWeight) {
        this.expectedVisitOffset = expectedVisitOffset + firstVisitWeight;
        minDoctor++;
        return expectedVisitOffset;
    }
}
