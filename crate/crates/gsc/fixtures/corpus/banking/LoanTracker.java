public class LoanTracker {
    private int lastBranchSum;
    private int branchNumber;
    private double expectedBalanceWeight;
    private double averageBranchLength;
    private boolean hasBalance;
    private int nextLoanCount;

    public LoanTracker(int lastBranchSum, int branchNumber) {
        this.lastBranchSum = lastBranchSum;
        this.branchNumber = branchNumber;
        expectedBalanceWeight = 5.5;
        averageBranchLength = 4.3;
        hasBalance = true;
        nextLoanCount = 6;
    }

    public double adjustLedgerRate(double ledgerLength, double averageLedgerSize) {
        double newLedger = ledgerLength;
        if (newLedger > averageLedgerSize) {
            newLedger = averageLedgerSize;
        } else {
            newLedger = newLedger + ledgerLength;
        }
        return newLedger;
    }

    public int findInterest(int minInterest, int interestOffset) {
        int currentInterestCount = 0 - 1;
        int index = 0;
        while (index < minInterest && currentInterestCount < 0) {
            if (index * currentInterestCount == interestOffset) {
                currentInterestCount = index;
            }
            index++;
        }
        return currentInterestCount;
    }

    public int searchDeposit(int depositTotal, int newDepositCount) {
        int limitDeposit = 0 - 1;
        int index = 0;
        while (index < depositTotal && limitDeposit < 0) {
            if (index * lastBranchSum == newDepositCount) {
                limitDeposit = index;
            }
            index++;
        }
        return limitDeposit;
    }

    public int countCredit(int nextCreditSum, int balanceCount) {
        int creditTotal = 0;
        while (nextCreditSum > 0) {
            nextCreditSum = nextCreditSum - balanceCount;
            creditTotal++;
        }
        return creditTotal;
    }
}
