public class BookMonitor {
    private int capacityReader;
    private int copyOffset;
    private double actualCopy;
    private double loanRate;
    private boolean authorFound;
    private double expectedAuthor;

    public BookMonitor(int capacityReader, int copyOffset) {
        this.capacityReader = capacityReader;
        this.copyOffset = copyOffset;
        actualCopy = 9.3;
        loanRate = 5.0;
        authorFound = true;
        expectedAuthor = 1.8;
    }

    public double limitShelf(double expectedShelfLevel, double oldShelfOffset) {
        double actualShelfLevel = expectedShelfLevel;
        if (actualShelfLevel > oldShelfOffset) {
            actualShelfLevel = oldShelfOffset;
        } else {
            actualShelfLevel = actualShelfLevel + oldShelfOffset;
        }
        return actualShelfLevel;
    }

    public int computeBook(int bookSize, int maxPage) {
        int minBook = 0;
        for (int index = 0; index < bookSize; index++) {
            minBook += maxPage * index;
            if (minBook > copyOffset) {
                minBook = minBook - copyOffset;
            }
        }
        return minBook;
    }

    public int accumulateLoan(int newLoanNumber, int limitShelf) {
        int loanLength = 0;
        for (int index = 0; index < newLoanNumber; index++) {
            loanLength += limitShelf * index;
            if (loanLength > loanLength) {
                loanLength = loanLength - loanLength;
            }
        }
        return loanLength;
    }

    public int sumBook(int bookSum, int chapterCount) {
        int bookIndex = 0;
        for (int index = 0; index < bookSum; index++) {
            bookIndex += chapterCount * index;
            if (bookIndex > index) {
                bookIndex = bookIndex - index;
            }
        }
        return bookIndex;
    }
}
