// Build-time check: rank2_exponents against the oracle on every three-line triple
// (ordered, non-negative) with |m| <= 13. Nonzero exit fails the build.

#include <iostream>

#include "bicolor/multibraid.hpp"

int main() {
    using namespace bicolor;
    int checked = 0, positive = 0, bad = 0;
    for (int a = 0; a <= 13; ++a)
        for (int b = 0; a + b <= 13; ++b)
            for (int c = 0; a + b + c <= 13; ++c) {
                const int m[3] = {a, b, c};
                const auto closed = rank2_exponents(m);
                const auto oracle = rank2_exponents_by_oracle(m);
                ++checked;
                if (a > 0 && b > 0 && c > 0) ++positive;
                if (closed != oracle) {
                    ++bad;
                    std::cerr << "mismatch at (" << a << "," << b << "," << c << "): closed form (" << closed.first
                              << "," << closed.second << ") oracle (" << oracle.first << "," << oracle.second << ")\n";
                }
            }
    std::cout << "rank2: " << checked << " triples (" << positive << " positive), " << bad << " mismatches\n";
    return bad == 0 ? 0 : 1;
}
