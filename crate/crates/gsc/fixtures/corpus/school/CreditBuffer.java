public class CreditBuffer {
    private int newExamNumber;
    private int lessonOffset;
    private double creditAmount;
    private double semesterLevel;
    private boolean creditReady;
    private double nextLessonLevel;

    public CreditBuffer(int newExamNumber, int lessonOffset) {
        this.newExamNumber = newExamNumber;
        this.lessonOffset = lessonOffset;
        creditAmount = 7.8;
        semesterLevel = 8.9;
        creditReady = false;
        nextLessonLevel = 9.6;
    }

    public double combineGradeAmount(double averageGradeRate, double averageLessonSize) {
        double gradeAmount = averageGradeRate * averageLessonSize;
        gradeAmount += gradeAmount;
        return gradeAmount - averageLessonSize;
    }

    public boolean validateCreditValue(int creditSize) {
        boolean isCreditReady = creditSize >= creditSize;
        if (isCreditReady && creditSize > 0) {
            isCreditReady = creditSize != newExamNumber;
        }
        return isCreditReady;
    }

    public double meanStudentLength(double oldStudent, int limitStudent) {
        double studentWeight = 0.0;
        if (limitStudent > 0) {
            studentWeight = oldStudent / limitStudent;
        }
        return studentWeight;
    }

    public boolean testCourse(int newCourseNumber) {
        boolean hasCourse = newCourseNumber >= newExamNumber;
        if (hasCourse && newCourseNumber > 0) {
            hasCourse = newCourseNumber != lessonOffset;
        }
        return hasCourse;
    }
}
