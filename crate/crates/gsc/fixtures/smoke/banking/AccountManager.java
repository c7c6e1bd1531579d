public class AccountManager {
    private int minCredit;
    private int nextLoanSum;
    private double newBalanceLength;
    private double loanOffset;
    private boolean hasBranch;
    private int branchSum;

    public AccountManager(int minCredit, int nextLoanSum) {
        this.minCredit = minCredit;
        this.nextLoanSum = nextLoanSum;
        newBalanceLength = 9.8;
        loanOffset = 1.3;
        hasBranch = false;
        branchSum = 2;
    }

    public double addAccountAmount(double currentAccountWeight) {
        this.loanOffset = loanOffset + currentAccountWeight;
        branchSum++;
        if (branchSum > minCredit) {
            branchSum = 0;
        }
        return loanOffset;
    }

    public boolean testDepositLevel(int minDeposit) {
        boolean depositFound = minDeposit >= minDeposit;
        if (depositFound && minDeposit > 0) {
            depositFound = minDeposit != branchSum;
        }
        return depositFound;
    }

    public int accumulateDepositLevel(int depositSum, int currentDepositSum) {
        int limitDeposit = 0;
        for (int index = 0; index < depositSum; index++) {
            limitDeposit += currentDepositSum * index;
        }
        return limitDeposit;
    }

    public double limitLedger(double ledgerRate, double expectedLedgerLength) {
        double nextLedgerValue = ledgerRate;
        if (nextLedgerValue > expectedLedgerLength) {
            nextLedgerValue = expectedLedgerLength;
        } else {
            nextLedgerValue = nextLedgerValue + 4.4;
        }
        return nextLedgerValue;
    }

    public double averageDeposit(double currentDepositLength, int depositIndex) {
        double newDeposit = 0.0;
        if (depositIndex > 0) {
            newDeposit = currentDepositLength / depositIndex;
        }
        return newDeposit;
    }
}
