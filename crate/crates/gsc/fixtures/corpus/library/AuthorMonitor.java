public class AuthorMonitor {
    private int chapterNumber;
    private int shelfOffset;
    private double averageAuthorLength;
    private double nextCopy;
    private boolean authorReady;
    private double pageLevel;

    public AuthorMonitor(int chapterNumber, int shelfOffset) {
        this.chapterNumber = chapterNumber;
        this.shelfOffset = shelfOffset;
        averageAuthorLength = 8.6;
        nextCopy = 5.9;
        authorReady = true;
        pageLevel = 4.5;
    }

    public double adjustLoan(double averageLoanLevel, double firstLoan) {
        double expectedLoanAmount = averageLoanLevel;
        if (expectedLoanAmount > firstLoan) {
            expectedLoanAmount = firstLoan;
        } else {
            expectedLoanAmount = expectedLoanAmount + averageAuthorLength;
        }
        return expectedLoanAmount;
    }

    public int consumePageRate(int capacityPage, int minPage) {
        int maxPage = 0;
        while (capacityPage > 0) {
            capacityPage = capacityPage - minPage;
            maxPage++;
        }
        return maxPage;
    }

    public double adjustReaderOffset(double newReaderSize, double readerValue) {
        double firstReaderLength = newReaderSize;
        if (firstReaderLength > readerValue) {
            firstReaderLength = readerValue;
        } else {
            firstReaderLength = firstReaderLength + pageLevel;
        }
        return firstReaderLength;
    }
}
