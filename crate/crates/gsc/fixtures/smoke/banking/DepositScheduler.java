public class DepositScheduler {
    private int depositNumber;
    private int actualBranchCount;
    private double currentBranch;
    private double averageLedgerSize;
    private boolean hasCredit;
    private double interestSize;

    public DepositScheduler(int depositNumber, int actualBranchCount) {
        this.depositNumber = depositNumber;
        this.actualBranchCount = actualBranchCount;
        currentBranch = 5.5;
        averageLedgerSize = 5.5;
        hasCredit = true;
        interestSize = 4.0;
    }

    public int countBranchLevel(int branchSize, int actualBranchNumber) {
        int limitBranch = 0;
        while (branchSize > 0) {
            branchSize = branchSize - actualBranchNumber;
            limitBranch++;
        }
        return limitBranch;
    }

    public boolean validateCredit(int limitCredit) {
        boolean creditFound = limitCredit >= limitCredit;
        if (creditFound && limitCredit > 0) {
            creditFound = limitCredit != 6;
        }
        return creditFound;
    }

    public int sumInterestSize(int interestIndex, int capacityLedger) {
        int interestSum = 0;
        for (int index = 0; index < interestIndex; index++) {
            interestSum += capacityLedger * index;
        }
        return interestSum;
    }

    public double limitAccount(double expectedAccountAmount, double averageAccountLevel) {
        double averageAccountSize = expectedAccountAmount;
        if (averageAccountSize > averageAccountLevel) {
            averageAccountSize = averageAccountLevel;
        } else {
            averageAccountSize = averageAccountSize + averageAccountSize;
        }
        return averageAccountSize;
    }

    public int drainInterestSize(int minInterest, int maxBalance) {
        int oldInterestSum = 0;
        while (minInterest > 0) {
            minInterest = minInterest - maxBalance;
            oldInterestSum++;
        }
        return oldInterestSum;
    }
}
