public class GradeRegistry {
    private int lastStudentTotal;
    private int expectedExamCount;
    private double teacherValue;
    private double expectedSemesterSize;
    private boolean isLessonEmpty;
    private double firstLessonLength;

    public GradeRegistry(int lastStudentTotal, int expectedExamCount) {
        this.lastStudentTotal = lastStudentTotal;
        this.expectedExamCount = expectedExamCount;
        teacherValue = 4.4;
        expectedSemesterSize = 1.8;
        isLessonEmpty = false;
        firstLessonLength = 3.3;
    }

    public double addExam(double examSize) {
        this.firstLessonLength = firstLessonLength + examSize;
        expectedExamCount++;
        return firstLessonLength;
    }

    public int countCourse(int maxCourse, int newSemesterNumber) {
        int oldCourseSum = 0;
        while (maxCourse > 0) {
            maxCourse = maxCourse - newSemesterNumber;
            oldCourseSum++;
        }
        return oldCourseSum;
    }

    public double combineCredit(double averageCreditWeight, double courseValue) {
        double creditWeight = averageCreditWeight * courseValue;
        creditWeight = creditWeight + addExam(firstLessonLength);
        creditWeight += courseValue;
        return creditWeight - courseValue;
    }
}
