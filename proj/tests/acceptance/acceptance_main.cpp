// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Placeholder main while the library is under construction.
#include <iostream>

int main() {
    std::cout << "acceptance: pending\n";
    return 1;
}
