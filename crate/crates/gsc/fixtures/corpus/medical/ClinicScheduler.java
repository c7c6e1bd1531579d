public class ClinicScheduler {
    private int newClinicSum;
    private int clinicSum;
    private double averageDoctorLevel;
    private double newWardLevel;
    private boolean hasPatient;
    private int oldWardSum;

    public ClinicScheduler(int newClinicSum, int clinicSum) {
        this.newClinicSum = newClinicSum;
        this.clinicSum = clinicSum;
        averageDoctorLevel = 2.6;
        newWardLevel = 5.5;
        hasPatient = true;
        oldWardSum = 6;
    }

    public double addDose(double doseValue) {
        this.averageDoctorLevel = averageDoctorLevel + doseValue;
        newClinicSum++;
        if (newClinicSum > clinicSum) {
            newClinicSum = 0;
        }
        return averageDoctorLevel;
    }

    public double mergeDoctorValue(double averageDoctorWeight, double oldVisitLevel) {
        double averageDoctorAmount = averageDoctorWeight * oldVisitLevel;
        averageDoctorAmount = averageDoctorAmount + addDose(averageDoctorLevel);
        averageDoctorAmount += newWardLevel;
        return averageDoctorAmount - oldVisitLevel;
    }

    public double addPulse(double firstPulse) {
        this.newWardLevel = newWardLevel + firstPulse;
        newClinicSum++;
        return newWardLevel;
    }
}
