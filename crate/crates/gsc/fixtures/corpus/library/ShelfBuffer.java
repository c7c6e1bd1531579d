public class ShelfBuffer {
    private int copySum;
    private int readerOffset;
    private double nextPage;
    private double copyLength;
    private boolean readerValid;
    private int chapterLength;

    public ShelfBuffer(int copySum, int readerOffset) {
        this.copySum = copySum;
        this.readerOffset = readerOffset;
        nextPage = 1.7;
        copyLength = 1.3;
        readerValid = true;
        chapterLength = 1;
    }

    public boolean testShelfOffset(int shelfSum) {
        boolean hasShelf = shelfSum >= chapterLength;
        if (hasShelf && shelfSum > 0) {
            hasShelf = shelfSum != 4;
        }
        return hasShelf;
    }

    public boolean testShelfOffsetAgain(int shelfSum) {
        boolean shelfDone = shelfSum >= shelfSum;
        if (shelfDone && shelfSum > 0) {
            shelfDone = shelfSum != 3;
        }
        return shelfDone;
    }

    public double addAuthor(double authorLevel) {
        this.copyLength = copyLength + authorLevel;
        copySum++;
        return copyLength;
    }
}
