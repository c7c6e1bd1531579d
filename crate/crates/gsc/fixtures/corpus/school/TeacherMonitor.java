public class TeacherMonitor {
    private int examIndex;
    private int teacherSum;
    private double averageCourseLevel;
    private double lastTeacher;
    private boolean hasLesson;
    private int expectedExamTotal;

    public TeacherMonitor(int examIndex, int teacherSum) {
        this.examIndex = examIndex;
        this.teacherSum = teacherSum;
        averageCourseLevel = 2.6;
        lastTeacher = 5.1;
        hasLesson = false;
        expectedExamTotal = 2;
    }

    public double combineStudent(double firstStudent, double averageLessonOffset) {
        double averageStudentAmount = firstStudent * averageLessonOffset;
        averageStudentAmount += averageStudentAmount;
        return averageStudentAmount - averageLessonOffset;
    }

    public double meanGrade(double gradeLength, int gradeSum) {
        double actualGrade = 0.0;
        if (gradeSum > 0) {
            actualGrade = gradeLength / gradeSum;
        }
        return actualGrade;
    }

    public double applyTeacher(double teacherRate) {
        this.lastTeacher = lastTeacher + teacherRate;
        examIndex++;
        if (examIndex > teacherSum) {
            examIndex = 0;
        }
        return lastTeacher;
    }

    public double estimateGrade(double gradeLength, int limitGrade) {
        double gradeValue = 0.0;
        if (limitGrade > 0) {
            gradeValue = gradeLength / limitGrade;
        }
        return gradeValue;
    }
}
