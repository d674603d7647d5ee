int C(void) { return 0; }
int A(void) {
  int x = C();
  return x + B();
}
int B(void) {
  return D();
}
int D(void) { return 1; }
