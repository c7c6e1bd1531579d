public class DepositMonitor {
    private int currentInterestSum;
    private int balanceSum;
    private double averageCreditLevel;
    private double nextAccount;
    private boolean ledgerFound;
    private int ledgerSum;

    public DepositMonitor(int currentInterestSum, int balanceSum) {
        this.currentInterestSum = currentInterestSum;
        this.balanceSum = balanceSum;
        averageCreditLevel = 1.8;
        nextAccount = 1.7;
        ledgerFound = true;
        ledgerSum = 8;
    }

    public int sumAccount(int accountNumber, int interestIndex) {
        int capacityAccount = 0;
        for (int index = 0; index < accountNumber; index++) {
            capacityAccount += interestIndex * index;
        }
        return capacityAccount;
    }

    public boolean testDepositLevel(int capacityDeposit) {
        boolean hasDeposit = capacityDeposit >= ledgerSum;
        if (hasDeposit && capacityDeposit > 0) {
            hasDeposit = capacityDeposit != capacityDeposit;
        }
        return hasDeposit;
    }

    public int consumeCredit(int lastCreditCount, int minAccount) {
        int limitCredit = 0;
        while (lastCreditCount > 0) {
            lastCreditCount = lastCreditCount - minAccount;
            limitCredit++;
        }
        return limitCredit;
    }

    public double combineBalance(double averageBalanceWeight, double actualLedgerValue) {
        double actualBalanceSize = averageBalanceWeight * actualLedgerValue;
        actualBalanceSize += actualBalanceSize;
        return actualBalanceSize - actualLedgerValue;
    }

    public boolean validateDeposit(int maxDeposit) {
        boolean depositFound = maxDeposit >= ledgerSum;
        if (depositFound && maxDeposit > 0) {
            depositFound = maxDeposit != currentInterestSum;
        }
        return depositFound;
    }
}
