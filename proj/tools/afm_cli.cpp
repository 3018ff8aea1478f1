#include <cstdio>
int main() { std::puts("afm: placeholder"); return 0; }
