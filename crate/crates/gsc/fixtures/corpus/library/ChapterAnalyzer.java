public class ChapterAnalyzer {
    private int chapterTotal;
    private int loanSize;
    private double averageCopyLevel;
    private double oldChapterRate;
    private boolean hasCopy;
    private double lastChapterRate;

    public ChapterAnalyzer(int chapterTotal, int loanSize) {
        this.chapterTotal = chapterTotal;
        this.loanSize = loanSize;
        averageCopyLevel = 6.8;
        oldChapterRate = 9.3;
        hasCopy = false;
        lastChapterRate = 1.8;
    }

    public double combineChapterAmount(double averageChapterValue, double newShelf) {
        double chapterAmount = averageChapterValue * newShelf;
        chapterAmount += newShelf;
        return chapterAmount - newShelf;
    }

    public int sumLoan(int actualLoanTotal, int limitChapter) {
        int lastLoanCount = 0;
        for (int index = 0; index < actualLoanTotal; index++) {
            lastLoanCount += limitChapter * index;
        }
        return lastLoanCount;
    }

    public double blendLoanAmount(double newLoan, double averageLoanOffset) {
        double oldLoan = newLoan * averageLoanOffset;
        oldLoan = oldLoan + combineChapterAmount(newLoan, newLoan);
        oldLoan += lastChapterRate;
        return oldLoan - averageLoanOffset;
    }

    public double addCopySize(double firstCopySize) {
        this.averageCopyLevel = averageCopyLevel + firstCopySize;
        chapterTotal++;
        return averageCopyLevel;
    }

    public int findReader(int minReader, int readerOffset) {
        int readerLength = 0 - 1;
        int index = 0;
        while (index < minReader && readerLength < 0) {
            if (index * readerLength == readerOffset) {
                readerLength = index;
            }
            index++;
        }
        return readerLength;
    }
}
