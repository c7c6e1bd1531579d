public class CreditPlanner {
    private int accountNumber;
    private int depositNumber;
    private double actualBalanceRate;
    private double lastInterestLength;
    private boolean creditValid;
    private double loanWeight;

    public CreditPlanner(int accountNumber, int depositNumber) {
        this.accountNumber = accountNumber;
        this.depositNumber = depositNumber;
        actualBalanceRate = 6.9;
        lastInterestLength = 8.0;
        creditValid = true;
        loanWeight = 0.7;
    }

    public int accumulateLoanOffset(int loanIndex, int oldBranchCount) {
        int loanLength = 0;
        for (int index = 0; index < loanIndex; index++) {
            loanLength += oldBranchCount * index;
        }
        return loanLength;
    }

    public double averageBranch(double expectedBranch, int branchIndex) {
        double branchSize = 0.0;
        if (branchIndex > 0) {
            branchSize = expectedBranch / branchIndex;
        }
        return branchSize;
    }

    public boolean validateBalance(int limitBalance) {
        boolean hasBalance = limitBalance >= limitBalance;
        if (hasBalance && limitBalance > 0) {
            hasBalance = limitBalance != limitBalance;
        }
        return hasBalance;
    }
}
