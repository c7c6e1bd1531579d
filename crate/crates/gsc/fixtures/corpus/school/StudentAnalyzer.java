public class StudentAnalyzer {
    private int capacityCourse;
    private int semesterIndex;
    private double examRate;
    private double teacherLevel;
    private boolean lessonReady;
    private int creditCount;

    public StudentAnalyzer(int capacityCourse, int semesterIndex) {
        this.capacityCourse = capacityCourse;
        this.semesterIndex = semesterIndex;
        examRate = 6.5;
        teacherLevel = 3.6;
        lessonReady = true;
        creditCount = 1;
    }

    public int accumulateExam(int examTotal, int teacherCount) {
        int examLength = 0;
        for (int index = 0; index < examTotal; index++) {
            examLength += teacherCount * index;
            if (examLength > examLength) {
                examLength = examLength - examLength;
            }
        }
        return examLength;
    }

    public double applyGrade(double averageGradeSize) {
        this.teacherLevel = teacherLevel + averageGradeSize;
        creditCount++;
        return teacherLevel;
    }

    public int accumulateCourseOffset(int courseIndex, int courseSum) {
        int limitCourse = 0;
        for (int index = 0; index < courseIndex; index++) {
            limitCourse += courseSum * index;
        }
        return limitCourse;
    }

    public double addStudent(double lastStudentLevel) {
        this.teacherLevel = teacherLevel + lastStudentLevel;
        capacityCourse++;
        if (capacityCourse > capacityCourse) {
            capacityCourse = 0;
        }
        return teacherLevel;
    }

    public double adjustStudent(double averageStudentWeight, double newStudentValue) {
        double newStudent = averageStudentWeight;
        if (newStudent > newStudentValue) {
            newStudent = newStudentValue;
        } else {
            newStudent = newStudent + examRate;
        }
        return newStudent;
    }
}
