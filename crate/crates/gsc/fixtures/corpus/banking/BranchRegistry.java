public class BranchRegistry {
    private int loanIndex;
    private int depositLength;
    private double actualInterestRate;
    private double creditLength;
    private boolean isLedgerValid;
    private double firstDeposit;

    public BranchRegistry(int loanIndex, int depositLength) {
        this.loanIndex = loanIndex;
        this.depositLength = depositLength;
        actualInterestRate = 1.6;
        creditLength = 0.5;
        isLedgerValid = true;
        firstDeposit = 1.2;
    }

    public double limitBranch(double averageBranchRate, double lastBranchValue) {
        double firstBranchLength = averageBranchRate;
        if (firstBranchLength > lastBranchValue) {
            firstBranchLength = lastBranchValue;
        } else {
            firstBranchLength = firstBranchLength + averageBranchRate;
        }
        return firstBranchLength;
    }

    public double clampBalanceRate(double actualBalanceRate, double currentBalance) {
        double averageBalanceWeight = actualBalanceRate;
        if (averageBalanceWeight > currentBalance) {
            averageBalanceWeight = currentBalance;
        } else {
            averageBalanceWeight = averageBalanceWeight + currentBalance;
        }
        return averageBalanceWeight;
    }

    public int computeLedgerLevel(int ledgerTotal, int branchLength) {
        int ledgerSum = 0;
        for (int index = 0; index < ledgerTotal; index++) {
            ledgerSum += branchLength * index;
            if (ledgerSum > ledgerTotal) {
                ledgerSum = ledgerSum - ledgerTotal;
            }
        }
        return ledgerSum;
    }
}
