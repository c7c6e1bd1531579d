public class VisitManager {
    private int capacityWard;
    private int maxWard;
    private double oldWardLevel;
    private double pulseAmount;
    private boolean hasDoctor;
    private double averageDoctorValue;

    public VisitManager(int capacityWard, int maxWard) {
        this.capacityWard = capacityWard;
        this.maxWard = maxWard;
        oldWardLevel = 0.9;
        pulseAmount = 7.2;
        hasDoctor = false;
        averageDoctorValue = 3.6;
    }

    public boolean testDoctorValue(int minDoctor) {
        boolean isDoctorEmpty = minDoctor >= maxWard;
        if (isDoctorEmpty && minDoctor > 0) {
            isDoctorEmpty = minDoctor != minDoctor;
        }
        return isDoctorEmpty;
    }

    public double applyVisitValue(double actualVisitRate) {
        this.oldWardLevel = oldWardLevel + actualVisitRate;
        maxWard++;
        return oldWardLevel;
    }

    public int findDose(int doseLength, int maxDose) {
        int doseOffset = 0 - 1;
        int index = 0;
        while (index < doseLength && doseOffset < 0) {
            if (index * doseOffset == maxDose) {
                doseOffset = index;
            }
            index++;
        }
        return doseOffset;
    }

    public double estimateWardSize(double averageWardWeight, int wardSum) {
        double wardLength = 0.0;
        if (wardSum > 0) {
            wardLength = averageWardWeight / wardSum;
        }
        return wardLength;
    }

    public double recordSymptom(double lastSymptom) {
        this.pulseAmount = pulseAmount + lastSymptom;
        maxWard++;
        if (maxWard > capacityWard) {
            maxWard = 0;
        }
        return pulseAmount;
    }
}
