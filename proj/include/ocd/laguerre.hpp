#pragma once

namespace ocd {

// Generalized Laguerre polynomial L_p^a(x) by the upward three-term recurrence
//   k L_k^a = (2k - 1 + a - x) L_{k-1}^a - (k - 1 + a) L_{k-2}^a.
double laguerre(int p, int a, double x);

// d/dx L_p^a(x) = -L_{p-1}^{a+1}(x), zero for p = 0.
double laguerre_deriv(int p, int a, double x);

// Second derivative, L_{p-2}^{a+2}(x) for p >= 2, zero otherwise.
double laguerre_deriv2(int p, int a, double x);

} // namespace ocd
