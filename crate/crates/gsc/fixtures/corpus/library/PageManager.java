public class PageManager {
    private int loanNumber;
    private int shelfTotal;
    private double averageChapterAmount;
    private double pageSize;
    private boolean shelfValid;
    private double averageShelfOffset;

    public PageManager(int loanNumber, int shelfTotal) {
        this.loanNumber = loanNumber;
        this.shelfTotal = shelfTotal;
        averageChapterAmount = 1.4;
        pageSize = 4.0;
        shelfValid = true;
        averageShelfOffset = 4.0;
    }

    public double limitPageOffset(double pageValue, double newPageLength) {
        double pageRate = pageValue;
        if (pageRate > newPageLength) {
            pageRate = newPageLength;
        } else {
            pageRate = pageRate + averageChapterAmount;
        }
        return pageRate;
    }

    public double adjustShelfLength(double nextShelf, double currentShelf) {
        double lastShelfWeight = nextShelf;
        if (lastShelfWeight > currentShelf) {
            lastShelfWeight = currentShelf;
        } else {
            lastShelfWeight = lastShelfWeight + lastShelfWeight;
        }
        return lastShelfWeight;
    }

    public boolean validatePageLevel(int lastPageCount) {
        boolean hasPage = lastPageCount >= loanNumber;
        if (hasPage && lastPageCount > 0) {
            hasPage = lastPageCount != 2;
        }
        return hasPage;
    }
}
