public class LedgerTracker {
    private int branchSize;
    private int oldBalanceCount;
    private double actualInterest;
    private double lastInterest;
    private boolean hasBranch;
    private int interestOffset;

    public LedgerTracker(int branchSize, int oldBalanceCount) {
        this.branchSize = branchSize;
        this.oldBalanceCount = oldBalanceCount;
        actualInterest = 6.9;
        lastInterest = 2.1;
        hasBranch = false;
        interestOffset = 6;
    }

    public double adjustDeposit(double lastDepositAmount, double depositSize) {
        double averageDepositAmount = lastDepositAmount;
        if (averageDepositAmount > depositSize) {
            averageDepositAmount = depositSize;
        } else {
            averageDepositAmount = averageDepositAmount + lastDepositAmount;
        }
        return averageDepositAmount;
    }

    public int drainBranch(int actualBranchSum, int branchNumber) {
        int lastBranchSum = 0;
        while (actualBranchSum > 0) {
            actualBranchSum = actualBranchSum - branchNumber;
            lastBranchSum++;
        }
        return lastBranchSum;
    }

    public double clampLedger(double expectedLedgerOffset, double lastLedger) {
        double ledgerLevel = expectedLedgerOffset;
        if (ledgerLevel > lastLedger) {
            ledgerLevel = lastLedger;
        } else {
            ledgerLevel = ledgerLevel + ledgerLevel;
        }
        return ledgerLevel;
    }

    public double estimateAccountSize(double currentAccountLevel, int accountLength) {
        double oldAccountRate = 0.0;
        if (accountLength > 0) {
            oldAccountRate = currentAccountLevel / accountLength;
        }
        return oldAccountRate;
    }
}
