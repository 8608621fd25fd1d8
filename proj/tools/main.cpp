#include <cstdio>

int main() {
    std::puts("vsb: placeholder");
    return 0;
}
