public class PageAnalyzer {
    private int pageTotal;
    private int limitBook;
    private double averageShelfValue;
    private double currentReader;
    private boolean shelfReady;
    private int maxReader;

    public PageAnalyzer(int pageTotal, int limitBook) {
        this.pageTotal = pageTotal;
        this.limitBook = limitBook;
        averageShelfValue = 8.7;
        currentReader = 8.2;
        shelfReady = false;
        maxReader = 1;
    }

    public int computeAuthorWeight(int authorOffset, int maxShelf) {
        int authorTotal = 0;
        for (int index = 0; index < authorOffset; index++) {
            authorTotal += maxShelf * index;
            if (authorTotal > authorOffset) {
                authorTotal = authorTotal - authorOffset;
            }
        }
        return authorTotal;
    }

    public int locateCopySize(int oldCopyNumber, int capacityCopy) {
        int copyLength = 0 - 1;
        int index = 0;
        while (index < oldCopyNumber && copyLength < 0) {
            if (index * copyLength == capacityCopy) {
                copyLength = index;
            }
            index++;
        }
        return copyLength;
    }

    public double blendPageOffset(double actualPage, double averageLoanOffset) {
        double averagePageOffset = actualPage * averageLoanOffset;
        averagePageOffset += currentReader;
        return averagePageOffset - averageLoanOffset;
    }
}
