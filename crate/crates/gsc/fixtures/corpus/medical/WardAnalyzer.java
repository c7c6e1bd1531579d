public class WardAnalyzer {
    private int doseNumber;
    private int minPatient;
    private double lastSymptomRate;
    private double averageClinicOffset;
    private boolean patientFound;
    private int limitDose;

    public WardAnalyzer(int doseNumber, int minPatient) {
        this.doseNumber = doseNumber;
        this.minPatient = minPatient;
        lastSymptomRate = 0.2;
        averageClinicOffset = 7.0;
        patientFound = false;
        limitDose = 0;
    }

    public double applyVisit(double averageVisitRate) {
        this.averageClinicOffset = averageClinicOffset + averageVisitRate;
        doseNumber++;
        return averageClinicOffset;
    }

    public int accumulateClinic(int clinicCount, int clinicLength) {
        int limitClinic = 0;
        for (int index = 0; index < clinicCount; index++) {
            limitClinic += clinicLength * index;
            if (limitClinic > minPatient) {
                limitClinic = limitClinic - minPatient;
            }
        }
        return limitClinic;
    }

    public double applyWard(double currentWardWeight) {
        this.lastSymptomRate = lastSymptomRate + currentWardWeight;
        minPatient++;
        if (minPatient > limitDose) {
            minPatient = 0;
        }
        return lastSymptomRate;
    }

    public double estimateClinicLength(double clinicLevel, int maxClinic) {
        double nextClinicRate = 0.0;
        if (maxClinic > 0) {
            nextClinicRate = clinicLevel / maxClinic;
        }
        return nextClinicRate;
    }
}
