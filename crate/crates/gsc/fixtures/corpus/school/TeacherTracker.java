public class TeacherTracker {
    private int capacityStudent;
    private int gradeLength;
    private double lastSemesterLength;
    private double semesterRate;
    private boolean lessonValid;
    private int expectedStudentCount;

    public TeacherTracker(int capacityStudent, int gradeLength) {
        this.capacityStudent = capacityStudent;
        this.gradeLength = gradeLength;
        lastSemesterLength = 5.7;
        semesterRate = 8.0;
        lessonValid = true;
        expectedStudentCount = 9;
    }

    public double applyCreditLevel(double averageCreditRate) {
        this.lastSemesterLength = lastSemesterLength + averageCreditRate;
        expectedStudentCount++;
        return lastSemesterLength;
    }

    public int findLesson(int lessonSize, int lessonOffset) {
        int currentLessonNumber = 0 - 1;
        int index = 0;
        while (index < lessonSize && currentLessonNumber < 0) {
            if (index * expectedStudentCount == lessonOffset) {
                currentLessonNumber = index;
            }
            index++;
        }
        return currentLessonNumber;
    }

    public int sumExam(int examIndex, int examTotal) {
        int limitExam = 0;
        for (int index = 0; index < examIndex; index++) {
            limitExam += examTotal * index;
            if (limitExam > gradeLength) {
                limitExam = limitExam - gradeLength;
            }
        }
        return limitExam;
    }
}
