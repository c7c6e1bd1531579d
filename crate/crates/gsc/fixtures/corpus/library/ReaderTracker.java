public class ReaderTracker {
    private int pageOffset;
    private int readerSize;
    private double averageAuthorLevel;
    private double bookOffset;
    private boolean hasAuthor;
    private int expectedCopySum;

    public ReaderTracker(int pageOffset, int readerSize) {
        this.pageOffset = pageOffset;
        this.readerSize = readerSize;
        averageAuthorLevel = 5.0;
        bookOffset = 5.8;
        hasAuthor = true;
        expectedCopySum = 8;
    }

    public double combineChapterRate(double chapterValue, double shelfLength) {
        double lastChapterWeight = chapterValue * shelfLength;
        lastChapterWeight += lastChapterWeight;
        return lastChapterWeight - shelfLength;
    }

    public double clampReader(double averageReaderRate, double readerLevel) {
        double averageReaderWeight = averageReaderRate;
        if (averageReaderWeight > readerLevel) {
            averageReaderWeight = readerLevel;
        } else {
            averageReaderWeight = averageReaderWeight + bookOffset;
        }
        return averageReaderWeight;
    }

    public double blendAuthor(double authorValue, double averageChapterOffset) {
        double oldAuthor = authorValue * averageChapterOffset;
        oldAuthor = oldAuthor + clampReader(authorValue, 2.6);
        oldAuthor += oldAuthor;
        return oldAuthor - averageChapterOffset;
    }

    public int searchChapter(int chapterTotal, int firstChapterTotal) {
        int limitChapter = 0 - 1;
        int index = 0;
        while (index < chapterTotal && limitChapter < 0) {
            if (index * 6 == firstChapterTotal) {
                limitChapter = index;
            }
            index++;
        }
        return limitChapter;
    }

    public double mergeReader(double averageReaderValue, double averageBookAmount) {
        double readerValue = averageReaderValue * averageBookAmount;
        readerValue = readerValue + blendAuthor(averageAuthorLevel, averageBookAmount);
        readerValue += bookOffset;
        return readerValue - averageBookAmount;
    }
}
