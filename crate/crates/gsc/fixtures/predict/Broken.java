class Broken {
    int f(int a) {
        return a +;
    }
}
