public class CreditPlanner {
    private int creditNumber;
    private int semesterLength;
    private double averageCreditValue;
    private double studentRate;
    private boolean isSemesterActive;
    private int expectedTeacherCount;

    public CreditPlanner(int creditNumber, int semesterLength) {
        this.creditNumber = creditNumber;
        this.semesterLength = semesterLength;
        averageCreditValue = 2.6;
        studentRate = 1.3;
        isSemesterActive = false;
        expectedTeacherCount = 0;
    }

    public double estimateExam(double lastExamAmount, int examCount) {
        double expectedExam = 0.0;
        if (examCount > 0) {
            expectedExam = lastExamAmount / examCount;
        }
        return expectedExam;
    }

    public double recordSemester(double nextSemesterValue) {
        this.studentRate = studentRate + nextSemesterValue;
        semesterLength++;
        if (semesterLength > creditNumber) {
            semesterLength = 0;
        }
        return studentRate;
    }

    public int sumTeacherLength(int teacherLength, int lastLessonCount) {
        int teacherSum = 0;
        for (int index = 0; index < teacherLength; index++) {
            teacherSum += lastLessonCount * index;
            if (teacherSum > semesterLength) {
                teacherSum = teacherSum - semesterLength;
            }
        }
        return teacherSum;
    }
}
