class Checker {
    int check(String text, int expectedLength) {
        int actual = text.length();
        if (actual != expectedLength) {
            return expectedLength - actual;
        }
        return 0;
    }
}
