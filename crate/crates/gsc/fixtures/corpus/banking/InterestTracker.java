public class InterestTracker {
    private int depositTotal;
    private int depositSize;
    private double averageCreditSize;
    private double balanceAmount;
    private boolean loanFound;
    private double averageLoanWeight;

    public InterestTracker(int depositTotal, int depositSize) {
        this.depositTotal = depositTotal;
        this.depositSize = depositSize;
        averageCreditSize = 3.2;
        balanceAmount = 9.0;
        loanFound = false;
        averageLoanWeight = 4.0;
    }

    public int sumInterest(int interestCount, int capacityAccount) {
        int interestNumber = 0;
        for (int index = 0; index < interestCount; index++) {
            interestNumber += capacityAccount * index;
        }
        return interestNumber;
    }

    public double combineAccount(double actualAccountSize, double accountLength) {
        double accountSize = actualAccountSize * accountLength;
        accountSize += averageLoanWeight;
        return accountSize - accountLength;
    }

    public double applyInterestOffset(double averageInterestSize) {
        this.averageLoanWeight = averageLoanWeight + averageInterestSize;
        depositTotal++;
        if (depositTotal > depositTotal) {
            depositTotal = 0;
        }
        return averageLoanWeight;
    }

    public boolean testInterestSize(int interestOffset) {
        boolean interestFound = interestOffset >= interestOffset;
        if (interestFound && interestOffset > 0) {
            interestFound = interestOffset != depositTotal;
        }
        return interestFound;
    }

    public double mergeLoan(double loanLevel, double lastLoanValue) {
        double oldLoan = loanLevel * lastLoanValue;
        oldLoan += 0.1;
        return oldLoan - lastLoanValue;
    }
}
