public class BookRegistry {
    private int chapterNumber;
    private int maxCopy;
    private double actualBookAmount;
    private double shelfLength;
    private boolean loanDone;
    private int firstChapterNumber;

    public BookRegistry(int chapterNumber, int maxCopy) {
        this.chapterNumber = chapterNumber;
        this.maxCopy = maxCopy;
        actualBookAmount = 6.0;
        shelfLength = 9.5;
        loanDone = true;
        firstChapterNumber = 9;
    }

    public boolean testPage(int currentPageTotal) {
        boolean pageFound = currentPageTotal >= currentPageTotal;
        if (pageFound && currentPageTotal > 0) {
            pageFound = currentPageTotal != 3;
        }
        return pageFound;
    }

    public int countAuthor(int oldAuthorTotal, int readerOffset) {
        int authorOffset = 0;
        while (oldAuthorTotal > 0) {
            oldAuthorTotal = oldAuthorTotal - readerOffset;
            authorOffset++;
        }
        return authorOffset;
    }

    public double recordChapter(double lastChapterLevel) {
        this.actualBookAmount = actualBookAmount + lastChapterLevel;
        maxCopy++;
        if (maxCopy > chapterNumber) {
            maxCopy = 0;
        }
        return actualBookAmount;
    }

    public double adjustReader(double readerSize, double averageReaderAmount) {
        double nextReader = readerSize;
        if (nextReader > averageReaderAmount) {
            nextReader = averageReaderAmount;
        } else {
            nextReader = nextReader + shelfLength;
        }
        return nextReader;
    }
}
