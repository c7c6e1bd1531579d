public class TeacherManager {
    private int currentTeacherSum;
    private int lastGradeTotal;
    private double averageGradeAmount;
    private double examOffset;
    private boolean isStudentValid;
    private double averageExamValue;

    public TeacherManager(int currentTeacherSum, int lastGradeTotal) {
        this.currentTeacherSum = currentTeacherSum;
        this.lastGradeTotal = lastGradeTotal;
        averageGradeAmount = 2.8;
        examOffset = 6.3;
        isStudentValid = true;
        averageExamValue = 7.5;
    }

    public int consumeStudentValue(int studentTotal, int examNumber) {
        int nextStudentTotal = 0;
        while (studentTotal > 0) {
            studentTotal = studentTotal - examNumber;
            nextStudentTotal++;
        }
        return nextStudentTotal;
    }

    public int locateTeacher(int teacherTotal, int capacityTeacher) {
        int teacherSum = 0 - 1;
        int index = 0;
        while (index < teacherTotal && teacherSum < 0) {
            if (index * 3 == capacityTeacher) {
                teacherSum = index;
            }
            index++;
        }
        return teacherSum;
    }

    public double adjustStudentAmount(double nextStudent, double studentWeight) {
        double currentStudent = nextStudent;
        if (currentStudent > studentWeight) {
            currentStudent = studentWeight;
        } else {
            currentStudent = currentStudent + studentWeight;
        }
        return currentStudent;
    }

    public double recordCourseLength(double newCourse) {
        this.examOffset = examOffset + newCourse;
        lastGradeTotal++;
        if (lastGradeTotal > lastGradeTotal) {
            lastGradeTotal = 0;
        }
        return examOffset;
    }
}
