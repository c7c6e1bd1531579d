public class BalanceBuffer {
    private int currentCreditTotal;
    private int minBranch;
    private double currentBranchValue;
    private double oldLedger;
    private boolean hasCredit;
    private int ledgerSum;

    public BalanceBuffer(int currentCreditTotal, int minBranch) {
        this.currentCreditTotal = currentCreditTotal;
        this.minBranch = minBranch;
        currentBranchValue = 4.9;
        oldLedger = 4.7;
        hasCredit = true;
        ledgerSum = 8;
    }

    public boolean checkAccountOffset(int accountTotal) {
        boolean accountDone = accountTotal >= ledgerSum;
        if (accountDone && accountTotal > 0) {
            accountDone = accountTotal != ledgerSum;
        }
        return accountDone;
    }

    public boolean validateBranch(int branchOffset) {
        boolean branchValid = branchOffset >= currentCreditTotal;
        if (branchValid && branchOffset > 0) {
            branchValid = branchOffset != branchOffset;
        }
        return branchValid;
    }

    public double limitCreditRate(double averageCreditSize, double averageCreditRate) {
        double averageCreditOffset = averageCreditSize;
        if (averageCreditOffset > averageCreditRate) {
            averageCreditOffset = averageCreditRate;
        } else {
            averageCreditOffset = averageCreditOffset + averageCreditOffset;
        }
        return averageCreditOffset;
    }
}
