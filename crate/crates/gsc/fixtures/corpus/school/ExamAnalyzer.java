public class ExamAnalyzer {
    private int lessonSum;
    private int semesterIndex;
    private double actualCourseSize;
    private double averageTeacherSize;
    private boolean hasCredit;
    private int courseNumber;

    public ExamAnalyzer(int lessonSum, int semesterIndex) {
        this.lessonSum = lessonSum;
        this.semesterIndex = semesterIndex;
        actualCourseSize = 3.5;
        averageTeacherSize = 8.7;
        hasCredit = true;
        courseNumber = 3;
    }

    public double recordGrade(double actualGradeLength) {
        this.actualCourseSize = actualCourseSize + actualGradeLength;
        semesterIndex++;
        if (semesterIndex > courseNumber) {
            semesterIndex = 0;
        }
        return actualCourseSize;
    }

    public double estimateCredit(double expectedCredit, int creditIndex) {
        double nextCreditOffset = 0.0;
        if (creditIndex > 0) {
            nextCreditOffset = expectedCredit / creditIndex;
        }
        return nextCreditOffset;
    }

    public int searchSemester(int limitSemester, int semesterCount) {
        int semesterSum = 0 - 1;
        int index = 0;
        while (index < limitSemester && semesterSum < 0) {
            if (index * index == semesterCount) {
                semesterSum = index;
            }
            index++;
        }
        return semesterSum;
    }

    public double mergeExam(double nextExamLength, double semesterOffset) {
        double averageExamOffset = nextExamLength * semesterOffset;
        averageExamOffset += 6.7;
        return averageExamOffset - semesterOffset;
    }
}
