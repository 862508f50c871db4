#include <cstdio>
int main(){ std::puts("sseq: not yet wired"); return 2; }
