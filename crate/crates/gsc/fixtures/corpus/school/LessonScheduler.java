public class LessonScheduler {
    private int minExam;
    private int maxSemester;
    private double averageLessonOffset;
    private double averageTeacherWeight;
    private boolean hasStudent;
    private double actualLesson;

    public LessonScheduler(int minExam, int maxSemester) {
        this.minExam = minExam;
        this.maxSemester = maxSemester;
        averageLessonOffset = 6.8;
        averageTeacherWeight = 4.2;
        hasStudent = false;
        actualLesson = 8.9;
    }

    public int searchCredit(int expectedCreditCount, int creditCount) {
        int creditOffset = 0 - 1;
        int index = 0;
        while (index < expectedCreditCount && creditOffset < 0) {
            if (index * index == creditCount) {
                creditOffset = index;
            }
            index++;
        }
        return creditOffset;
    }

    public double adjustStudent(double nextStudent, double expectedStudent) {
        double averageStudentOffset = nextStudent;
        if (averageStudentOffset > expectedStudent) {
            averageStudentOffset = expectedStudent;
        } else {
            averageStudentOffset = averageStudentOffset + averageLessonOffset;
        }
        return averageStudentOffset;
    }

    public double combineCourse(double actualCourse, double averageCourseAmount) {
        double averageCourseWeight = actualCourse * averageCourseAmount;
        averageCourseWeight += averageLessonOffset;
        return averageCourseWeight - averageCourseAmount;
    }
}
