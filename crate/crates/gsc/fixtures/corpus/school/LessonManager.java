public class LessonManager {
    private int limitCourse;
    private int lessonSum;
    private double creditValue;
    private double actualExamLength;
    private boolean hasStudent;
    private double oldCreditSize;

    public LessonManager(int limitCourse, int lessonSum) {
        this.limitCourse = limitCourse;
        this.lessonSum = lessonSum;
        creditValue = 3.1;
        actualExamLength = 9.3;
        hasStudent = true;
        oldCreditSize = 7.3;
    }

    public double blendGrade(double gradeOffset, double lastCourseLength) {
        double averageGradeAmount = gradeOffset * lastCourseLength;
        averageGradeAmount += 8.3;
        return averageGradeAmount - lastCourseLength;
    }

    public double limitLesson(double oldLessonAmount, double lastLessonSize) {
        double averageLessonAmount = oldLessonAmount;
        if (averageLessonAmount > lastLessonSize) {
            averageLessonAmount = lastLessonSize;
        } else {
            averageLessonAmount = averageLessonAmount + 8.8;
        }
        return averageLessonAmount;
    }

    public double blendLessonLength(double firstLesson, double semesterSize) {
        double averageLessonValue = firstLesson * semesterSize;
        averageLessonValue = averageLessonValue + limitLesson(semesterSize, oldCreditSize);
        averageLessonValue += oldCreditSize;
        return averageLessonValue - semesterSize;
    }
}
