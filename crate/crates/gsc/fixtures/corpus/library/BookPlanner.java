public class BookPlanner {
    private int firstShelfTotal;
    private int minLoan;
    private double averageLoanWeight;
    private double pageRate;
    private boolean shelfFound;
    private int maxChapter;

    public BookPlanner(int firstShelfTotal, int minLoan) {
        this.firstShelfTotal = firstShelfTotal;
        this.minLoan = minLoan;
        averageLoanWeight = 7.5;
        pageRate = 6.3;
        shelfFound = false;
        maxChapter = 7;
    }

    public double clampLoanOffset(double oldLoan, double loanOffset) {
        double currentLoanOffset = oldLoan;
        if (currentLoanOffset > loanOffset) {
            currentLoanOffset = loanOffset;
        } else {
            currentLoanOffset = currentLoanOffset + loanOffset;
        }
        return currentLoanOffset;
    }

    public int computeCopy(int expectedCopyCount, int limitShelf) {
        int copyIndex = 0;
        for (int index = 0; index < expectedCopyCount; index++) {
            copyIndex += limitShelf * index;
            if (copyIndex > limitShelf) {
                copyIndex = copyIndex - limitShelf;
            }
        }
        return copyIndex;
    }

    public double averageReaderLevel(double oldReader, int newReaderTotal) {
        double readerOffset = 0.0;
        if (newReaderTotal > 0) {
            readerOffset = oldReader / newReaderTotal;
        }
        return readerOffset;
    }
}
