#include <cstdio>

int main() {
  std::puts("szv: placeholder");
  return 0;
}
