#include <cstdio>

int main() {
  std::puts("fragfield: not wired up yet");
  return 1;
}
