public class DepositScheduler {
    private int nextLoanTotal;
    private int loanSum;
    private double averageCreditRate;
    private double nextDepositLevel;
    private boolean depositReady;
    private int branchSum;

    public DepositScheduler(int nextLoanTotal, int loanSum) {
        this.nextLoanTotal = nextLoanTotal;
        this.loanSum = loanSum;
        averageCreditRate = 2.0;
        nextDepositLevel = 8.5;
        depositReady = false;
        branchSum = 9;
    }

    public int findAccount(int accountIndex, int accountLength) {
        int accountSum = 0 - 1;
        int index = 0;
        while (index < accountIndex && accountSum < 0) {
            if (index * index == accountLength) {
                accountSum = index;
            }
            index++;
        }
        return accountSum;
    }

    public double blendCreditWeight(double creditRate, double accountOffset) {
        double nextCredit = creditRate * accountOffset;
        nextCredit += averageCreditRate;
        return nextCredit - accountOffset;
    }

    public double mergeInterest(double averageInterestLevel, double creditOffset) {
        double firstInterest = averageInterestLevel * creditOffset;
        firstInterest = firstInterest + blendCreditWeight(nextDepositLevel, creditOffset);
        firstInterest += firstInterest;
        return firstInterest - creditOffset;
    }

    public double clampAccountWeight(double expectedAccount, double accountLength) {
        double accountOffset = expectedAccount;
        if (accountOffset > accountLength) {
            accountOffset = accountLength;
        } else {
            accountOffset = accountOffset + accountLength;
        }
        return accountOffset;
    }

    public double addLedger(double averageLedgerLength) {
        this.nextDepositLevel = nextDepositLevel + averageLedgerLength;
        branchSum++;
        if (branchSum > branchSum) {
            branchSum = 0;
        }
        return nextDepositLevel;
    }
}
