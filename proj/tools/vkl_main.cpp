#include <cstdio>
int main() { std::puts("vkl: not yet wired"); return 0; }
