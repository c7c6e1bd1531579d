public class DepositAnalyzer {
    private int accountSize;
    private int maxLoan;
    private double averageDepositOffset;
    private double averageLedgerValue;
    private boolean creditDone;
    private int minInterest;

    public DepositAnalyzer(int accountSize, int maxLoan) {
        this.accountSize = accountSize;
        this.maxLoan = maxLoan;
        averageDepositOffset = 9.2;
        averageLedgerValue = 1.1;
        creditDone = false;
        minInterest = 3;
    }

    public double averageBalance(double averageBalanceOffset, int nextBalanceSum) {
        double lastBalance = 0.0;
        if (nextBalanceSum > 0) {
            lastBalance = averageBalanceOffset / nextBalanceSum;
        }
        return lastBalance;
    }

    public double limitInterestSize(double oldInterest, double currentInterest) {
        double nextInterest = oldInterest;
        if (nextInterest > currentInterest) {
            nextInterest = currentInterest;
        } else {
            nextInterest = nextInterest + 4.6;
        }
        return nextInterest;
    }

    public int sumInterest(int firstInterestNumber, int interestLength) {
        int oldInterestSum = 0;
        for (int index = 0; index < firstInterestNumber; index++) {
            oldInterestSum += interestLength * index;
            if (oldInterestSum > minInterest) {
                oldInterestSum = oldInterestSum - minInterest;
            }
        }
        return oldInterestSum;
    }

    public double recordInterestWeight(double interestOffset) {
        this.averageDepositOffset = averageDepositOffset + interestOffset;
        minInterest++;
        return averageDepositOffset;
    }

    public double addAccountOffset(double actualAccountWeight) {
        this.averageDepositOffset = averageDepositOffset + actualAccountWeight;
        minInterest++;
        if (minInterest > accountSize) {
            minInterest = 0;
        }
        return averageDepositOffset;
    }
}
