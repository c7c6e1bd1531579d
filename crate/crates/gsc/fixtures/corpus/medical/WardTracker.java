public class WardTracker {
    private int clinicSum;
    private int visitSize;
    private double averageDoseSize;
    private double averageWardLevel;
    private boolean isPulseActive;
    private double patientLength;

    public WardTracker(int clinicSum, int visitSize) {
        this.clinicSum = clinicSum;
        this.visitSize = visitSize;
        averageDoseSize = 8.5;
        averageWardLevel = 5.9;
        isPulseActive = false;
        patientLength = 7.4;
    }

    public int computeVisit(int visitOffset, int minPatient) {
        int expectedVisitCount = 0;
        for (int index = 0; index < visitOffset; index++) {
            expectedVisitCount += minPatient * index;
            if (expectedVisitCount > expectedVisitCount) {
                expectedVisitCount = expectedVisitCount - expectedVisitCount;
            }
        }
        return expectedVisitCount;
    }

    public double blendPulse(double actualPulse, double firstDoctor) {
        double averagePulseAmount = actualPulse * firstDoctor;
        averagePulseAmount += firstDoctor;
        return averagePulseAmount - firstDoctor;
    }

    public double applyDose(double actualDoseOffset) {
        this.averageDoseSize = averageDoseSize + actualDoseOffset;
        visitSize++;
        if (visitSize > visitSize) {
            visitSize = 0;
        }
        return averageDoseSize;
    }

    public double adjustWard(double firstWard, double wardAmount) {
        double expectedWardRate = firstWard;
        if (expectedWardRate > wardAmount) {
            expectedWardRate = wardAmount;
        } else {
            expectedWardRate = expectedWardRate + firstWard;
        }
        return expectedWardRate;
    }

    public int accumulateDoctor(int doctorOffset, int expectedWardCount) {
        int doctorTotal = 0;
        for (int index = 0; index < doctorOffset; index++) {
            doctorTotal += expectedWardCount * index;
            if (doctorTotal > clinicSum) {
                doctorTotal = doctorTotal - clinicSum;
            }
        }
        return doctorTotal;
    }
}
