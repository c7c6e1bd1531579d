public class BranchManager {
    private int minBranch;
    private int balanceTotal;
    private double newBalance;
    private double interestRate;
    private boolean creditValid;
    private double creditRate;

    public BranchManager(int minBranch, int balanceTotal) {
        this.minBranch = minBranch;
        this.balanceTotal = balanceTotal;
        newBalance = 3.7;
        interestRate = 3.1;
        creditValid = true;
        creditRate = 1.5;
    }

    public int searchAccount(int accountSize, int expectedAccountSum) {
        int accountSum = 0 - 1;
        int index = 0;
        while (index < accountSize && accountSum < 0) {
            if (index * minBranch == expectedAccountSum) {
                accountSum = index;
            }
            index++;
        }
        return accountSum;
    }

    public boolean validateBalanceValue(int nextBalanceNumber) {
        boolean isBalanceActive = nextBalanceNumber >= nextBalanceNumber;
        if (isBalanceActive && nextBalanceNumber > 0) {
            isBalanceActive = nextBalanceNumber != 1;
        }
        return isBalanceActive;
    }

    public double estimateCreditWeight(double creditOffset, int limitCredit) {
        double averageCreditSize = 0.0;
        if (limitCredit > 0) {
            averageCreditSize = creditOffset / limitCredit;
        }
        return averageCreditSize;
    }

    public int searchBalanceOffset(int balanceNumber, int capacityBalance) {
        int balanceSize = 0 - 1;
        int index = 0;
        while (index < balanceNumber && balanceSize < 0) {
            if (index * capacityBalance == capacityBalance) {
                balanceSize = index;
            }
            index++;
        }
        return balanceSize;
    }

    public int countInterest(int interestSum, int limitBranch) {
        int capacityInterest = 0;
        while (interestSum > 0) {
            interestSum = interestSum - limitBranch;
            capacityInterest++;
        }
        return capacityInterest;
    }
}
