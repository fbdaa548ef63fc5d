#include "ocd/laguerre.hpp"

namespace ocd {

double laguerre(int p, int a, double x) {
    if (p <= 0) return 1.0;
    double lm2 = 1.0;             // L_0
    double lm1 = 1.0 + a - x;     // L_1
    for (int k = 2; k <= p; ++k) {
        const double lk = ((2.0 * k - 1.0 + a - x) * lm1 - (k - 1.0 + a) * lm2) / k;
        lm2 = lm1;
        lm1 = lk;
    }
    return lm1;
}

double laguerre_deriv(int p, int a, double x) {
    if (p <= 0) return 0.0;
    return -laguerre(p - 1, a + 1, x);
}

double laguerre_deriv2(int p, int a, double x) {
    if (p <= 1) return 0.0;
    return laguerre(p - 2, a + 2, x);
}

} // namespace ocd
