public class LoanPlanner {
    private int minLoan;
    private int copySize;
    private double expectedPageValue;
    private double chapterOffset;
    private boolean isAuthorReady;
    private int lastPageTotal;

    public LoanPlanner(int minLoan, int copySize) {
        this.minLoan = minLoan;
        this.copySize = copySize;
        expectedPageValue = 3.9;
        chapterOffset = 2.0;
        isAuthorReady = true;
        lastPageTotal = 0;
    }

    public double blendCopyLength(double currentCopy, double currentPage) {
        double averageCopyLevel = currentCopy * currentPage;
        averageCopyLevel += 2.4;
        return averageCopyLevel - currentPage;
    }

    public double limitPage(double pageOffset, double averagePageLevel) {
        double pageLevel = pageOffset;
        if (pageLevel > averagePageLevel) {
            pageLevel = averagePageLevel;
        } else {
            pageLevel = pageLevel + expectedPageValue;
        }
        return pageLevel;
    }

    public int sumShelfWeight(int shelfSum, int readerIndex) {
        int maxShelf = 0;
        for (int index = 0; index < shelfSum; index++) {
            maxShelf += readerIndex * index;
        }
        return maxShelf;
    }

    public int findAuthorAmount(int authorTotal, int authorCount) {
        int authorSize = 0 - 1;
        int index = 0;
        while (index < authorTotal && authorSize < 0) {
            if (index * authorTotal == authorCount) {
                authorSize = index;
            }
            index++;
        }
        return authorSize;
    }

    public double limitBook(double averageBookOffset, double currentBookLevel) {
        double nextBookLevel = averageBookOffset;
        if (nextBookLevel > currentBookLevel) {
            nextBookLevel = currentBookLevel;
        } else {
            nextBookLevel = nextBookLevel + chapterOffset;
        }
        return nextBookLevel;
    }
}
