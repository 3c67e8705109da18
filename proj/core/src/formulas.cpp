#include "lozenge/formulas.hpp"

#include <stdexcept>

#include "lozenge/matrix.hpp"

namespace lozenge {

namespace {

Integer require_integral(const Rational& value, const char* what) {
    if (value.get_den() != 1) {
        throw std::logic_error(std::string(what) + ": non-integral value " + to_string(value));
    }
    return value.get_num();
}

// Common core of the one-dent ratio: the pure Pochhammer factor multiplying
// G(n-2, x+3) in the one-dent count.
Rational f_ratio_factor(int n, int x, int i) {
    const Rational num = pochhammer(Rational(x + 1), i - 1) *
                         pochhammer(Rational(n - i + 1), i - 1) *
                         pochhammer(Rational(2 * x + 2 * n + i), i - 2) *
                         Rational(2 * x + 2 * n);
    const Rational den = pochhammer(Rational(2 * n - i), i - 1) *
                         pochhammer(Rational(n + x), i - 1) * Rational(factorial(i - 1));
    return num / den;
}

}  // namespace

Integer g_count(int n, int x) {
    if (x < 0) throw std::invalid_argument("g_count: x must be non-negative");
    if (n < -2) throw std::invalid_argument("g_count: n out of range");
    if (n < 0) return Integer(1);
    Rational product(1);
    for (int k = 1; k <= n; ++k) {
        product *= pochhammer(Rational(2 * x + 2 * k), k) *
                   pochhammer(make_rational(2 * (x + 2 * k) + 1, 2), k - 1);
        product /= pochhammer(Rational(k), k) *
                   pochhammer(make_rational(2 * (x + k) + 1, 2), k - 1);
    }
    Rational scale(1);
    for (int k = 0; k < n; ++k) scale *= 2;
    product /= scale;
    return require_integral(product, "g_count");
}

Integer f_count(int n, int x, int i) {
    if (n < 1 || x < 0 || i < 1)
        throw std::invalid_argument("f_count: invalid parameters");
    if (i > n) return Integer(0);
    const Rational value = Rational(g_count(n - 2, x + 3)) * f_ratio_factor(n, x, i);
    return require_integral(value, "f_count");
}

Integer e_count(int n, int x, int i, int j) {
    if (n < 2 || x < 0 || !(1 <= i && i < j && j <= n))
        throw std::invalid_argument("e_count: invalid parameters");
    const Rational num = Rational(f_count(n - 1, x, i)) * Rational(f_count(n, x, j)) -
                         Rational(f_count(n - 1, x, j)) * Rational(f_count(n, x, i));
    const Rational value = num / Rational(g_count(n - 1, x));
    return require_integral(value, "e_count");
}

Integer c_determinant(int n, int x) {
    if (n < 1 || x < 0) throw std::invalid_argument("c_determinant: invalid parameters");
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                Rational(binomial(static_cast<long>(x) + i + j, 2L * j - i));
        }
    }
    return require_integral(m.determinant(), "c_determinant");
}

Integer c_product(int n, int x) {
    if (n < 1 || x < 0) throw std::invalid_argument("c_product: invalid parameters");
    Rational product(1);
    for (int k = 1; k <= n - 1; ++k) {
        product *= pochhammer(Rational(2 * x + 2 * k + 2), k) *
                   pochhammer(make_rational(2 * (x + 2 * k) + 3, 2), k - 1);
        product /= pochhammer(Rational(k), k) *
                   pochhammer(make_rational(2 * (x + k) + 3, 2), k - 1);
    }
    Rational scale(1);
    for (int k = 0; k < n - 1; ++k) scale *= 2;
    product /= scale;
    return require_integral(product, "c_product");
}

bool kuo_check_f(int n, int x, int i) {
    if (n < 3 || x < 0 || i < 1 || i > n)
        throw std::invalid_argument("kuo_check_f: invalid parameters");
    const Integer lhs = f_count(n, x, i) * g_count(n - 3, x + 3);
    Integer tail(0);
    if (i - 2 >= 1) tail = g_count(n - 1, x) * f_count(n - 2, x + 3, i - 2);
    const Integer rhs = g_count(n - 2, x + 3) * f_count(n - 1, x, i) + tail;
    return lhs == rhs;
}

bool kuo_check_e(int n, int x, int i, int j) {
    if (n < 2 || x < 0 || !(1 <= i && i < j && j <= n))
        throw std::invalid_argument("kuo_check_e: invalid parameters");
    const Integer lhs = g_count(n - 1, x) * e_count(n, x, i, j);
    const Integer rhs = f_count(n - 1, x, i) * f_count(n, x, j) -
                        f_count(n - 1, x, j) * f_count(n, x, i);
    return lhs == rhs;
}

}  // namespace lozenge
