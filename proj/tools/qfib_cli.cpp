#include <cstdio>

int main() {
    std::puts("qfib: CLI not wired yet");
    return 2;
}
