#pragma once

#include "lozenge/exact.hpp"

namespace lozenge {

// Closed-form product evaluators for the region-family tiling counts, and
// the quadratic condensation identities used to validate them. All values
// are exact; rational intermediates must collapse to integers.

/// Tiling count of G(n, x). Empty-region convention: 1 for n < 0.
Integer g_count(int n, int x);

/// Tiling count of F(n, x, i); 0 when i > n (vanishing-factor convention,
/// needed by the two-dent evaluator below).
Integer f_count(int n, int x, int i);

/// Tiling count of E(n, x, i, j) via the quadratic identity
/// (F(n-1,i) F(n,j) - F(n-1,j) F(n,i)) / G(n-1).
/// The division is exact for every valid parameter set; a non-exact
/// division signals an implementation bug and throws std::logic_error.
Integer e_count(int n, int x, int i, int j);

/// det(binomial(x+i+j, 2j-i))_{0 <= i,j <= n-1}, evaluated exactly.
Integer c_determinant(int n, int x);
/// Product form of the same determinant.
Integer c_product(int n, int x);

/// Quadratic recurrence for the one-dent counts:
/// F(n,x,i) G(n-3,x+3) == G(n-2,x+3) F(n-1,x,i) + G(n-1,x) F(n-2,x+3,i-2),
/// with the last term taken as 0 when i - 2 < 1.
bool kuo_check_f(int n, int x, int i);

/// Quadratic identity defining the two-dent counts:
/// G(n-1,x) E(n,x,i,j) == F(n-1,x,i) F(n,x,j) - F(n-1,x,j) F(n,x,i).
bool kuo_check_e(int n, int x, int i, int j);

}  // namespace lozenge
