public class BalanceMonitor {
    private int oldBranchSum;
    private int capacityAccount;
    private double oldBranchSize;
    private double nextLedgerValue;
    private boolean hasAccount;
    private double currentDepositRate;

    public BalanceMonitor(int oldBranchSum, int capacityAccount) {
        this.oldBranchSum = oldBranchSum;
        this.capacityAccount = capacityAccount;
        oldBranchSize = 1.5;
        nextLedgerValue = 5.5;
        hasAccount = false;
        currentDepositRate = 9.5;
    }

    public double blendInterestValue(double averageInterestWeight, double oldDeposit) {
        double actualInterest = averageInterestWeight * oldDeposit;
        actualInterest += oldBranchSize;
        return actualInterest - oldDeposit;
    }

    public int countLedgerAmount(int ledgerOffset, int maxInterest) {
        int firstLedgerSum = 0;
        while (ledgerOffset > 0) {
            ledgerOffset = ledgerOffset - maxInterest;
            firstLedgerSum++;
        }
        return firstLedgerSum;
    }

    public double clampDeposit(double oldDeposit, double averageDepositLevel) {
        double firstDepositValue = oldDeposit;
        if (firstDepositValue > averageDepositLevel) {
            firstDepositValue = averageDepositLevel;
        } else {
            firstDepositValue = firstDepositValue + oldBranchSize;
        }
        return firstDepositValue;
    }

    public double recordLoan(double loanLength) {
        this.oldBranchSize = oldBranchSize + loanLength;
        capacityAccount++;
        return oldBranchSize;
    }

    public double applyAccount(double accountWeight) {
        this.nextLedgerValue = nextLedgerValue + accountWeight;
        oldBranchSum++;
        return nextLedgerValue;
    }
}
