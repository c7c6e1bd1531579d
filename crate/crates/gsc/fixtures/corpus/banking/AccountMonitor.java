public class AccountMonitor {
    private int lastBalanceSum;
    private int firstBranchNumber;
    private double currentAccount;
    private double averageCreditLength;
    private boolean hasCredit;
    private double currentCredit;

    public AccountMonitor(int lastBalanceSum, int firstBranchNumber) {
        this.lastBalanceSum = lastBalanceSum;
        this.firstBranchNumber = firstBranchNumber;
        currentAccount = 7.7;
        averageCreditLength = 4.2;
        hasCredit = false;
        currentCredit = 3.4;
    }

    public int findCredit(int creditTotal, int creditLength) {
        int oldCreditSum = 0 - 1;
        int index = 0;
        while (index < creditTotal && oldCreditSum < 0) {
            if (index * creditLength == creditLength) {
                oldCreditSum = index;
            }
            index++;
        }
        return oldCreditSum;
    }

    public double estimateAccount(double firstAccount, int accountSize) {
        double averageAccountLevel = 0.0;
        if (accountSize > 0) {
            averageAccountLevel = firstAccount / accountSize;
        }
        return averageAccountLevel;
    }

    public double applyLoan(double loanWeight) {
        this.currentAccount = currentAccount + loanWeight;
        lastBalanceSum++;
        return currentAccount;
    }

    public double mergeDepositRate(double actualDeposit, double interestWeight) {
        double averageDepositOffset = actualDeposit * interestWeight;
        averageDepositOffset += currentCredit;
        return averageDepositOffset - interestWeight;
    }

    public int countCreditWeight(int creditIndex, int accountNumber) {
        int creditCount = 0;
        while (creditIndex > 0) {
            creditIndex = creditIndex - accountNumber;
            creditCount++;
        }
        return creditCount;
    }
}
