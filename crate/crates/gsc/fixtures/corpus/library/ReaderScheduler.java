public class ReaderScheduler {
    private int copyOffset;
    private int pageTotal;
    private double shelfAmount;
    private double newShelf;
    private boolean hasChapter;
    private int minBook;

    public ReaderScheduler(int copyOffset, int pageTotal) {
        this.copyOffset = copyOffset;
        this.pageTotal = pageTotal;
        shelfAmount = 9.2;
        newShelf = 0.8;
        hasChapter = false;
        minBook = 8;
    }

    public double meanChapter(double currentChapter, int currentChapterNumber) {
        double chapterWeight = 0.0;
        if (currentChapterNumber > 0) {
            chapterWeight = currentChapter / currentChapterNumber;
        }
        return chapterWeight;
    }

    public double addBook(double bookWeight) {
        this.shelfAmount = shelfAmount + bookWeight;
        copyOffset++;
        return shelfAmount;
    }

    public int sumBookLength(int currentBookCount, int minShelf) {
        int bookCount = 0;
        for (int index = 0; index < currentBookCount; index++) {
            bookCount += minShelf * index;
        }
        return bookCount;
    }
}
