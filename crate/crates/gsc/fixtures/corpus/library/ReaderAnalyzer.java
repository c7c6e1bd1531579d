public class ReaderAnalyzer {
    private int readerLength;
    private int minLoan;
    private double copyValue;
    private double shelfSize;
    private boolean loanDone;
    private double actualChapterRate;

    public ReaderAnalyzer(int readerLength, int minLoan) {
        this.readerLength = readerLength;
        this.minLoan = minLoan;
        copyValue = 7.6;
        shelfSize = 8.7;
        loanDone = true;
        actualChapterRate = 0.1;
    }

    public int findShelf(int actualShelfSum, int shelfTotal) {
        int shelfCount = 0 - 1;
        int index = 0;
        while (index < actualShelfSum && shelfCount < 0) {
            if (index * shelfCount == shelfTotal) {
                shelfCount = index;
            }
            index++;
        }
        return shelfCount;
    }

    public double mergeCopy(double copySize, double firstReaderRate) {
        double newCopyOffset = copySize * firstReaderRate;
        newCopyOffset += firstReaderRate;
        return newCopyOffset - firstReaderRate;
    }

    public int locateLoan(int loanLength, int loanSum) {
        int loanOffset = 0 - 1;
        int index = 0;
        while (index < loanLength && loanOffset < 0) {
            if (index * readerLength == loanSum) {
                loanOffset = index;
            }
            index++;
        }
        return loanOffset;
    }

    public double mergeChapter(double chapterSize, double averageAuthorValue) {
        double chapterRate = chapterSize * averageAuthorValue;
        chapterRate += averageAuthorValue;
        return chapterRate - averageAuthorValue;
    }

    public int searchBook(int bookOffset, int bookIndex) {
        int lastBookSum = 0 - 1;
        int index = 0;
        while (index < bookOffset && lastBookSum < 0) {
            if (index * bookIndex == bookIndex) {
                lastBookSum = index;
            }
            index++;
        }
        return lastBookSum;
    }
}
