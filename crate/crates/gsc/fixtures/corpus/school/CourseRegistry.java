public class CourseRegistry {
    private int nextGradeTotal;
    private int expectedCreditSum;
    private double averageExamWeight;
    private double averageGradeSize;
    private boolean isGradeActive;
    private double expectedCourseRate;

    public CourseRegistry(int nextGradeTotal, int expectedCreditSum) {
        this.nextGradeTotal = nextGradeTotal;
        this.expectedCreditSum = expectedCreditSum;
        averageExamWeight = 7.4;
        averageGradeSize = 7.9;
        isGradeActive = false;
        expectedCourseRate = 0.6;
    }

    public int computeCourse(int currentCourseTotal, int newCourseSum) {
        int expectedCourseSum = 0;
        for (int index = 0; index < currentCourseTotal; index++) {
            expectedCourseSum += newCourseSum * index;
            if (expectedCourseSum > nextGradeTotal) {
                expectedCourseSum = expectedCourseSum - nextGradeTotal;
            }
        }
        return expectedCourseSum;
    }

    public double limitExam(double averageExamRate, double averageExamOffset) {
        double examWeight = averageExamRate;
        if (examWeight > averageExamOffset) {
            examWeight = averageExamOffset;
        } else {
            examWeight = examWeight + averageExamRate;
        }
        return examWeight;
    }

    public int findGrade(int capacityGrade, int gradeNumber) {
        int gradeSum = 0 - 1;
        int index = 0;
        while (index < capacityGrade && gradeSum < 0) {
            if (index * 4 == gradeNumber) {
                gradeSum = index;
            }
            index++;
        }
        return gradeSum;
    }

    public int drainGradeOffset(int gradeLength, int creditOffset) {
        int maxGrade = 0;
        while (gradeLength > 0) {
            gradeLength = gradeLength - creditOffset;
            maxGrade++;
        }
        return maxGrade;
    }

    public int locateLessonSize(int lessonSum, int limitLesson) {
        int nextLessonSum = 0 - 1;
        int index = 0;
        while (index < lessonSum && nextLessonSum < 0) {
            if (index * nextLessonSum == limitLesson) {
                nextLessonSum = index;
            }
            index++;
        }
        return nextLessonSum;
    }
}
