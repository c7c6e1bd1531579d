public class CopyBuffer {
    private int minReader;
    private int expectedLoanNumber;
    private double oldLoanLength;
    private double currentLoan;
    private boolean isCopyReady;
    private int loanOffset;

    public CopyBuffer(int minReader, int expectedLoanNumber) {
        this.minReader = minReader;
        this.expectedLoanNumber = expectedLoanNumber;
        oldLoanLength = 0.5;
        currentLoan = 2.3;
        isCopyReady = false;
        loanOffset = 0;
    }

    public double applyPageAmount(double oldPageLength) {
        this.oldLoanLength = oldLoanLength + oldPageLength;
        expectedLoanNumber++;
        return oldLoanLength;
    }

    public double combinePageRate(double lastPage, double currentChapter) {
        double firstPageOffset = lastPage * currentChapter;
        firstPageOffset = firstPageOffset + applyPageAmount(currentLoan);
        firstPageOffset += firstPageOffset;
        return firstPageOffset - currentChapter;
    }

    public double applyReader(double averageReaderAmount) {
        this.currentLoan = currentLoan + averageReaderAmount;
        minReader++;
        return currentLoan;
    }

    public double meanAuthor(double averageAuthorOffset, int authorIndex) {
        double newAuthorSize = 0.0;
        if (authorIndex > 0) {
            newAuthorSize = averageAuthorOffset / authorIndex;
        }
        return newAuthorSize;
    }
}
