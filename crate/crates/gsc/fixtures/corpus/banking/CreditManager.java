public class CreditManager {
    private int limitDeposit;
    private int limitLoan;
    private double newAccountOffset;
    private double firstInterest;
    private boolean hasCredit;
    private int maxBalance;

    public CreditManager(int limitDeposit, int limitLoan) {
        this.limitDeposit = limitDeposit;
        this.limitLoan = limitLoan;
        newAccountOffset = 8.3;
        firstInterest = 7.8;
        hasCredit = true;
        maxBalance = 8;
    }

    public double recordCredit(double currentCredit) {
        this.newAccountOffset = newAccountOffset + currentCredit;
        maxBalance++;
        return newAccountOffset;
    }

    public double clampLedger(double ledgerAmount, double actualLedger) {
        double ledgerValue = ledgerAmount;
        if (ledgerValue > actualLedger) {
            ledgerValue = actualLedger;
        } else {
            ledgerValue = ledgerValue + ledgerValue;
        }
        return ledgerValue;
    }

    public int sumLedger(int oldLedgerTotal, int capacityDeposit) {
        int oldLedgerSum = 0;
        for (int index = 0; index < oldLedgerTotal; index++) {
            oldLedgerSum += capacityDeposit * index;
        }
        return oldLedgerSum;
    }

    public double blendDepositSize(double averageDepositOffset, double averageInterestLevel) {
        double expectedDeposit = averageDepositOffset * averageInterestLevel;
        expectedDeposit = expectedDeposit + recordCredit(6.1);
        expectedDeposit += newAccountOffset;
        return expectedDeposit - averageInterestLevel;
    }

    public double meanLedgerWeight(double ledgerOffset, int minLedger) {
        double ledgerLevel = 0.0;
        if (minLedger > 0) {
            ledgerLevel = ledgerOffset / minLedger;
        }
        return ledgerLevel;
    }
}
