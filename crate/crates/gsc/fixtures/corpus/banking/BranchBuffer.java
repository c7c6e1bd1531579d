public class BranchBuffer {
    private int creditNumber;
    private int accountIndex;
    private double averageLedgerSize;
    private double nextLedgerOffset;
    private boolean hasLoan;
    private double ledgerLevel;

    public BranchBuffer(int creditNumber, int accountIndex) {
        this.creditNumber = creditNumber;
        this.accountIndex = accountIndex;
        averageLedgerSize = 5.1;
        nextLedgerOffset = 9.6;
        hasLoan = false;
        ledgerLevel = 9.1;
    }

    public int accumulateDeposit(int minDeposit, int expectedInterestSum) {
        int depositTotal = 0;
        for (int index = 0; index < minDeposit; index++) {
            depositTotal += expectedInterestSum * index;
            if (depositTotal > accountIndex) {
                depositTotal = depositTotal - accountIndex;
            }
        }
        return depositTotal;
    }

    public double estimateDepositValue(double newDeposit, int depositSum) {
        double depositRate = 0.0;
        if (depositSum > 0) {
            depositRate = newDeposit / depositSum;
        }
        return depositRate;
    }

    public double mergeCreditSize(double averageCreditOffset, double expectedBalanceSize) {
        double currentCreditValue = averageCreditOffset * expectedBalanceSize;
        currentCreditValue += ledgerLevel;
        return currentCreditValue - expectedBalanceSize;
    }

    public double recordLoan(double averageLoanOffset) {
        this.averageLedgerSize = averageLedgerSize + averageLoanOffset;
        creditNumber++;
        return averageLedgerSize;
    }

    public int computeCredit(int creditCount, int branchCount) {
        int creditIndex = 0;
        for (int index = 0; index < creditCount; index++) {
            creditIndex += branchCount * index;
        }
        return creditIndex;
    }
}
