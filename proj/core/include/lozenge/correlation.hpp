#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/poly.hpp"

namespace lozenge {

// Correlation of the side-2 triangular gap with the 60-degree corner:
// exact finite-size ratios, the limiting double sum, its moment
// factorization, the piecewise-polynomial closed form, and the
// method-of-images asymptotics.

/// Limit of the two-dent count ratio E(n,1,i,j)/E(n,1,1,3) as n grows:
/// i j (j-i) (i^2 + ij + j^2 - 2i - 2j - 1) / 24.
Rational e_ratio_limit(int i, int j);

/// One-dent ratio F(n,1,i)/F(n,1,1) in closed form (pure Pochhammer factor).
Rational f_ratio(long n, int i);

/// Finite-n two-dent ratio E(n,1,i,j)/E(n,1,1,3), computed in the cancelled
/// form so that n in the tens of thousands stays cheap. Exactly equal to the
/// ratio of the two-dent counts.
Rational e_ratio_finite(long n, int i, int j);

/// k-th power moment of the terminating hypergeometric sum:
/// S^(k)(r; x) = sum_{i=0}^{r} (-r)_i (r)_i / ((1)_i (1/2)_i) x^i i^k.
Rational moment_direct(int k, int r, const Rational& x);
/// Closed form of S^(k)(r; 1/4) via the rational trig table, k <= 5.
Rational moment_closed(int k, int r);

/// Falling-factorial (descending) moments and their closed forms at x = 1/4.
Rational descending_moment_direct(int k, int r, const Rational& x);
Rational descending_moment_closed(int k, int r);

/// Expansion of (b-a)^2 A B (A^2 + AB + B^2 - 2A - 2B - 1), A = 2v-r+a,
/// B = 2v-r+b, as a polynomial in a, b with coefficients in r, v.
/// Variables are indexed a=0, b=1, r=2, v=3.
struct MonomialCoefficients {
    Polynomial full;                                    // in a, b, r, v
    std::map<std::pair<int, int>, Polynomial> by_ab;    // (lambda, mu) -> poly in r, v
    std::size_t monomial_count() const { return full.term_count(); }
    Polynomial coefficient(int lambda, int mu) const;
};
MonomialCoefficients expand_coefficients();

/// One (a, b) term of the correlation double sum, including sign and
/// factorial weights. Vanishes at a = b and is symmetric in (a, b).
Rational correlation_summand(int r, int v, int a, int b);

/// Correlation via the double sum, evaluated on two independent routes
/// (raw double sum and moment-separated form); throws std::logic_error if
/// they disagree.
Rational omega_double_sum(int r, int v);

/// Exact correlation, piecewise in r mod 3 (degree-4 polynomial branches).
Rational omega_exact(int r, int v);

/// The master trig form of the same value (single expression using the
/// rational trig values at 2r); equals omega_exact on every residue class.
Rational omega_master_form(int r, int v);

/// Leading-order asymptotics (4/81) r (3v-r) (3v-2r) (r^2 - 3rv + 3v^2).
/// Requires 3v - 2r >= 0; the value is 0 on the boundary line 3v = 2r.
double omega_asymptotic(int r, int v);

// The gap and its five mirror images in the two sides of the angle.
// Points are stored as (p, q) meaning (p, q*sqrt(3)) in the corner frame,
// so squared distances are exact integers.
struct ImagePoint {
    Integer p;
    Integer q;
    bool operator==(const ImagePoint&) const = default;
};
ImagePoint reflect_in_l1(const ImagePoint& pt);  // line at -30 degrees through the corner
ImagePoint reflect_in_l2(const ImagePoint& pt);  // vertical line through the corner

struct ImageConfiguration {
    int r = 0, v = 0;
    std::array<ImagePoint, 6> points;
    Integer squared_distance(int i, int j) const;
    double distance(int i, int j) const;
};
ImageConfiguration image_configuration(int r, int v);

/// Compares the polynomial asymptotics against (1/1944) times the cube root
/// of the product of the 15 pairwise image distances; rhs_sixth is the same
/// product expressed through squared distances (charge-2 exponents) under a
/// sixth root. Requires 3v - 2r > 0.
struct DistanceProductCheck {
    double lhs = 0;
    double rhs_cbrt = 0;
    double rhs_sixth = 0;
    double rel_error = 0;
};
DistanceProductCheck distance_product_check(int r, int v);

/// Finite-n correlation: the gapped-region count divided by the two-dent
/// normalizer count at the same n, as an exact rational.
Rational finite_n_correlation(long n, int r, int v);

struct CorrelationReport {
    int r = 0, v = 0;
    Rational exact_value;
    Rational double_sum_value;
    int sum_sign = 0;          // sign of the double sum before |.|
    bool interior = false;     // 3v - 2r > 0
    double asymptotic_value = 0;  // set when 3v - 2r >= 0
    double asymptotic_ratio = 0;  // exact/asymptotic, set when interior and nonzero
    bool has_distance_check = false;
    DistanceProductCheck distance_check;
    std::vector<std::pair<long, Rational>> finite_n_samples;
};
CorrelationReport correlate(int r, int v);

std::string report_to_json(const CorrelationReport& rep);
std::string report_to_plain(const CorrelationReport& rep);
std::string report_to_csv(const CorrelationReport& rep);
CorrelationReport report_from_json(const std::string& text);

}  // namespace lozenge
