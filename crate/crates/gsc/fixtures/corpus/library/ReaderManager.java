public class ReaderManager {
    private int capacityReader;
    private int minCopy;
    private double averageBookWeight;
    private double readerValue;
    private boolean authorFound;
    private int maxShelf;

    public ReaderManager(int capacityReader, int minCopy) {
        this.capacityReader = capacityReader;
        this.minCopy = minCopy;
        averageBookWeight = 8.7;
        readerValue = 9.9;
        authorFound = true;
        maxShelf = 0;
    }

    public int accumulateAuthor(int authorCount, int pageTotal) {
        int authorSize = 0;
        for (int index = 0; index < authorCount; index++) {
            authorSize += pageTotal * index;
            if (authorSize > maxShelf) {
                authorSize = authorSize - maxShelf;
            }
        }
        return authorSize;
    }

    public int countPage(int firstPageSum, int capacityChapter) {
        int limitPage = 0;
        while (firstPageSum > 0) {
            firstPageSum = firstPageSum - capacityChapter;
            limitPage++;
        }
        return limitPage;
    }

    public double mergeReader(double nextReader, double chapterSize) {
        double averageReaderRate = nextReader * chapterSize;
        averageReaderRate += averageBookWeight;
        return averageReaderRate - chapterSize;
    }

    public int locateLoan(int newLoanCount, int minLoan) {
        int loanCount = 0 - 1;
        int index = 0;
        while (index < newLoanCount && loanCount < 0) {
            if (index * maxShelf == minLoan) {
                loanCount = index;
            }
            index++;
        }
        return loanCount;
    }
}
