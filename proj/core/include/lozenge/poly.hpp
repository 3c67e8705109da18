#pragma once

#include <array>
#include <map>
#include <stdexcept>

#include "lozenge/exact.hpp"

namespace lozenge {

/// Sparse polynomial in four fixed variables with exact integer
/// coefficients. Term order (and hence iteration/serialization order) is the
/// lexicographic order on exponent tuples.
class Polynomial {
public:
    using Exponents = std::array<int, 4>;
    using TermMap = std::map<Exponents, Integer>;

    Polynomial() = default;

    static Polynomial constant(const Integer& c) {
        Polynomial p;
        if (c != 0) p.terms_[{0, 0, 0, 0}] = c;
        return p;
    }
    static Polynomial variable(std::size_t index, int power = 1) {
        if (index >= 4) throw std::invalid_argument("Polynomial: variable index out of range");
        Exponents e{0, 0, 0, 0};
        e[index] = power;
        Polynomial p;
        p.terms_[e] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Integer coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
        Polynomial out = constant(Integer(1));
        for (int t = 0; t < k; ++t) out = out * *this;
        return out;
    }

    Rational evaluate(const std::array<Rational, 4>& values) const {
        Rational total(0);
        for (const auto& [e, c] : terms_) {
            Rational term{c};
            for (std::size_t v = 0; v < 4; ++v) {
                for (int t = 0; t < e[v]; ++t) term *= values[v];
            }
            total += term;
        }
        return total;
    }

private:
    void add_term(const Exponents& e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

}  // namespace lozenge
