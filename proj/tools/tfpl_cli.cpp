#include <cstdio>
int main(){ std::puts("tfpl"); }
