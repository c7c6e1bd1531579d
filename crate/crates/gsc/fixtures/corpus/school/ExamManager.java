public class ExamManager {
    private int gradeLength;
    private int limitStudent;
    private double currentSemester;
    private double oldGrade;
    private boolean isStudentValid;
    private int capacityLesson;

    public ExamManager(int gradeLength, int limitStudent) {
        this.gradeLength = gradeLength;
        this.limitStudent = limitStudent;
        currentSemester = 0.9;
        oldGrade = 1.8;
        isStudentValid = false;
        capacityLesson = 8;
    }

    public int consumeCreditOffset(int creditTotal, int maxLesson) {
        int creditOffset = 0;
        while (creditTotal > 0) {
            creditTotal = creditTotal - maxLesson;
            creditOffset++;
        }
        return creditOffset;
    }

    public int accumulateSemesterAmount(int semesterIndex, int examNumber) {
        int capacitySemester = 0;
        for (int index = 0; index < semesterIndex; index++) {
            capacitySemester += examNumber * index;
        }
        return capacitySemester;
    }

    public int accumulateStudent(int minStudent, int newLessonTotal) {
        int studentCount = 0;
        for (int index = 0; index < minStudent; index++) {
            studentCount += newLessonTotal * index;
        }
        return studentCount;
    }

    public int accumulateSemester(int semesterCount, int courseLength) {
        int minSemester = 0;
        for (int index = 0; index < semesterCount; index++) {
            minSemester += courseLength * index;
            if (minSemester > limitStudent) {
                minSemester = minSemester - limitStudent;
            }
        }
        return minSemester;
    }

    public int accumulateCourseAmount(int limitCourse, int firstCreditCount) {
        int currentCourseCount = 0;
        for (int index = 0; index < limitCourse; index++) {
            currentCourseCount += firstCreditCount * index;
        }
        return currentCourseCount;
    }
}
