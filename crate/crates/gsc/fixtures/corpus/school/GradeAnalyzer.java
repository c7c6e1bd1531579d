public class GradeAnalyzer {
    private int expectedCreditSum;
    private int studentOffset;
    private double averageTeacherOffset;
    private double actualTeacher;
    private boolean hasCourse;
    private int minGrade;

    public GradeAnalyzer(int expectedCreditSum, int studentOffset) {
        this.expectedCreditSum = expectedCreditSum;
        this.studentOffset = studentOffset;
        averageTeacherOffset = 9.2;
        actualTeacher = 4.1;
        hasCourse = true;
        minGrade = 2;
    }

    public int searchStudent(int maxStudent, int newStudentCount) {
        int studentSize = 0 - 1;
        int index = 0;
        while (index < maxStudent && studentSize < 0) {
            if (index * studentOffset == newStudentCount) {
                studentSize = index;
            }
            index++;
        }
        return studentSize;
    }

    public double blendSemesterValue(double lastSemesterLength, double averageSemesterSize) {
        double expectedSemester = lastSemesterLength * averageSemesterSize;
        expectedSemester += actualTeacher;
        return expectedSemester - averageSemesterSize;
    }

    public boolean checkStudentRate(int limitStudent) {
        boolean studentFound = limitStudent >= minGrade;
        if (studentFound && limitStudent > 0) {
            studentFound = limitStudent != limitStudent;
        }
        return studentFound;
    }

    public double mergeStudent(double expectedStudentRate, double averageStudentLength) {
        double oldStudent = expectedStudentRate * averageStudentLength;
        oldStudent += 0.3;
        return oldStudent - averageStudentLength;
    }

    public int consumeLesson(int lessonSize, int courseNumber) {
        int maxLesson = 0;
        while (lessonSize > 0) {
            lessonSize = lessonSize - courseNumber;
            maxLesson++;
        }
        return maxLesson;
    }
}
