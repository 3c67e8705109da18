#include "lozenge/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lozenge {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pochhammer(const Rational& a, long k) {
    if (k >= 0) {
        Rational result(1);
        Rational term(a);
        for (long t = 0; t < k; ++t) {
            result *= term;
            term += 1;
        }
        return result;
    }
    const long m = -k;
    Rational denom(1);
    Rational term = a - m;
    for (long t = 0; t < m; ++t) {
        if (term == 0)
            throw std::domain_error("pochhammer: vanishing factor at negative index");
        denom *= term;
        term += 1;
    }
    return Rational(1) / denom;
}

namespace {

std::mutex g_factorial_mutex;
std::vector<Integer> g_factorials = {Integer(1), Integer(1)};
std::size_t g_factorial_cap = 50000;

}  // namespace

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    const auto un = static_cast<std::size_t>(n);
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    if (un < g_factorials.size()) return g_factorials[un];
    if (un <= g_factorial_cap) {
        while (g_factorials.size() <= un) {
            g_factorials.push_back(g_factorials.back() *
                                   Integer(static_cast<unsigned long>(g_factorials.size())));
        }
        return g_factorials[un];
    }
    Integer result = g_factorials.back();
    for (std::size_t t = g_factorials.size(); t <= un; ++t) {
        result *= static_cast<unsigned long>(t);
    }
    return result;
}

void set_factorial_cache_cap(std::size_t cap) {
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    g_factorial_cap = cap;
}

std::size_t factorial_cache_cap() {
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    return g_factorial_cap;
}

Integer binomial(long n, long k) {
    if (k < 0) return Integer(0);
    Integer base(n);
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

Rational binomial(const Rational& a, long k) {
    if (k < 0) return Rational(0);
    return pochhammer(a - k + 1, k) / Rational(factorial(k));
}

TrigValue trig_at(long r) {
    const int residue = static_cast<int>(((r % 6) + 6) % 6);
    static const int cos2[6] = {2, 1, -1, -2, -1, 1};
    static const int sin2[6] = {0, 1, 1, 0, -1, -1};
    return TrigValue{residue, make_rational(cos2[residue], 2), make_rational(sin2[residue], 2)};
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Integer parse_integer(const std::string& s) {
    Integer v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_integer: malformed integer '" + s + "'");
    return v;
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    Rational r(num);
    r /= Rational(den);
    return r;
}

}  // namespace lozenge
