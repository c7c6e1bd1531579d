public class DepositTracker {
    private int loanOffset;
    private int limitDeposit;
    private double actualAccount;
    private double averageInterestRate;
    private boolean isAccountReady;
    private double averageInterestWeight;

    public DepositTracker(int loanOffset, int limitDeposit) {
        this.loanOffset = loanOffset;
        this.limitDeposit = limitDeposit;
        actualAccount = 4.2;
        averageInterestRate = 7.5;
        isAccountReady = false;
        averageInterestWeight = 9.2;
    }

    public double addLoan(double averageLoanAmount) {
        this.averageInterestWeight = averageInterestWeight + averageLoanAmount;
        loanOffset++;
        return averageInterestWeight;
    }

    public int sumLedger(int ledgerIndex, int balanceCount) {
        int limitLedger = 0;
        for (int index = 0; index < ledgerIndex; index++) {
            limitLedger += balanceCount * index;
        }
        return limitLedger;
    }

    public double clampDeposit(double firstDeposit, double averageDepositLength) {
        double actualDepositSize = firstDeposit;
        if (actualDepositSize > averageDepositLength) {
            actualDepositSize = averageDepositLength;
        } else {
            actualDepositSize = actualDepositSize + actualDepositSize;
        }
        return actualDepositSize;
    }

    public double averageBalance(double firstBalance, int newBalanceNumber) {
        double actualBalance = 0.0;
        if (newBalanceNumber > 0) {
            actualBalance = firstBalance / newBalanceNumber;
        }
        return actualBalance;
    }

    public double estimateInterest(double interestAmount, int maxInterest) {
        double nextInterest = 0.0;
        if (maxInterest > 0) {
            nextInterest = interestAmount / maxInterest;
        }
        return nextInterest;
    }
}
