int B(void) { return 0; }
int A(void) {
  int x = B();
  return x + B();
}
