#include "lozenge/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace lozenge {

namespace {

Rational rat(long n) { return Rational(n); }

}  // namespace

Rational e_ratio_limit(int i, int j) {
    if (!(1 <= i && i < j)) throw std::invalid_argument("e_ratio_limit: need 1 <= i < j");
    const long li = i, lj = j;
    return Rational(li * lj * (lj - li) *
                    (li * li + li * lj + lj * lj - 2 * li - 2 * lj - 1)) /
           rat(24);
}

Rational f_ratio(long n, int i) {
    if (n < 1 || i < 1) throw std::invalid_argument("f_ratio: invalid parameters");
    if (i > n) return Rational(0);
    const Rational num = pochhammer(rat(2), i - 1) * pochhammer(rat(n - i + 1), i - 1) *
                         pochhammer(rat(2 * n + 2 + i), i - 2) * rat(2 * n + 2);
    const Rational den = pochhammer(rat(2 * n - i), i - 1) * pochhammer(rat(n + 1), i - 1) *
                         Rational(factorial(i - 1));
    return num / den;
}

namespace {

// (F(n-1,i)/F(n-1,1)) (F(n,j)/F(n,1)) - (F(n-1,j)/F(n-1,1)) (F(n,i)/F(n,1));
// the two-dent count ratio with the large common prefactor cancelled.
// Labels beyond their family range vanish inside f_ratio.
Rational dent_pair_form(long n, int i, int j) {
    return f_ratio(n - 1, i) * f_ratio(n, j) - f_ratio(n - 1, j) * f_ratio(n, i);
}

}  // namespace

Rational e_ratio_finite(long n, int i, int j) {
    if (n < 4) throw std::invalid_argument("e_ratio_finite: n >= 4 required");
    if (!(1 <= i && i < j)) throw std::invalid_argument("e_ratio_finite: need 1 <= i < j");
    return dent_pair_form(n, i, j) / dent_pair_form(n, 1, 3);
}

Rational moment_direct(int k, int r, const Rational& x) {
    if (k < 0 || r < 0) throw std::invalid_argument("moment_direct: invalid parameters");
    Rational total(0);
    Rational coeff(1);  // (-r)_i (r)_i / ((1)_i (1/2)_i) x^i, built incrementally
    for (int i = 0; i <= r; ++i) {
        if (i > 0) {
            coeff *= rat(-r + i - 1) * rat(r + i - 1) * x;
            coeff /= rat(i) * make_rational(2 * i - 1, 2);
        }
        Rational power(1);
        for (int t = 0; t < k; ++t) power *= rat(i);
        total += coeff * power;
    }
    return total;
}

Rational moment_closed(int k, int r) {
    if (r < 0) throw std::invalid_argument("moment_closed: r must be non-negative");
    const TrigValue t = trig_at(r);
    const Rational& c = t.cos_value;
    const Rational& s = t.sin_over_sqrt3;  // sin(r*pi/3)/sqrt(3)
    const Rational R = rat(r);
    switch (k) {
        case 0:
            return c;
        case 1:
            return -R * s;
        case 2:
            return -R * R / rat(3) * c - rat(2) * R / rat(3) * s;
        case 3:
            return R * (R * R - rat(2)) / rat(3) * s - rat(2) * R * R / rat(3) * c;
        case 4:
            return R * R * (R * R - rat(12)) / rat(9) * c +
                   rat(2) * R * (rat(6) * R * R - rat(5)) / rat(9) * s;
        case 5:
            return -R * (rat(3) * R * R * R * R - rat(120) * R * R + rat(74)) / rat(27) * s +
                   rat(10) * R * R * (rat(2) * R * R - rat(9)) / rat(27) * c;
        default:
            throw std::invalid_argument("moment_closed: k must be in 0..5");
    }
}

Rational descending_moment_direct(int k, int r, const Rational& x) {
    if (k < 0 || r < 0)
        throw std::invalid_argument("descending_moment_direct: invalid parameters");
    Rational total(0);
    Rational coeff(1);
    for (int i = 0; i <= r; ++i) {
        if (i > 0) {
            coeff *= rat(-r + i - 1) * rat(r + i - 1) * x;
            coeff /= rat(i) * make_rational(2 * i - 1, 2);
        }
        Rational fall(1);
        for (int t = 0; t < k; ++t) fall *= rat(i - t);
        total += coeff * fall;
    }
    return total;
}

Rational descending_moment_closed(int k, int r) {
    if (r < 0) throw std::invalid_argument("descending_moment_closed: r non-negative");
    const TrigValue t = trig_at(r);
    const Rational& c = t.cos_value;
    const Rational& s = t.sin_over_sqrt3;
    const Rational R = rat(r);
    switch (k) {
        case 0:
            return c;
        case 1:
            return -R * s;
        case 2:
            return -R * R / rat(3) * c + R / rat(3) * s;
        case 3:
            return R * (R * R - rat(2)) / rat(3) * s + R * R / rat(3) * c;
        case 4:
            return R * R * (R * R - rat(9)) / rat(9) * c -
                   rat(2) * R * (rat(3) * R * R - rat(7)) / rat(9) * s;
        case 5:
            return -R * (rat(3) * R * R * R * R - rat(75) * R * R + rat(152)) / rat(27) * s -
                   rat(10) * R * R * (R * R - rat(9)) / rat(27) * c;
        default:
            throw std::invalid_argument("descending_moment_closed: k must be in 0..5");
    }
}

Polynomial MonomialCoefficients::coefficient(int lambda, int mu) const {
    auto it = by_ab.find({lambda, mu});
    return it == by_ab.end() ? Polynomial() : it->second;
}

MonomialCoefficients expand_coefficients() {
    const Polynomial a = Polynomial::variable(0);
    const Polynomial b = Polynomial::variable(1);
    const Polynomial r = Polynomial::variable(2);
    const Polynomial v = Polynomial::variable(3);
    const Polynomial two = Polynomial::constant(Integer(2));
    const Polynomial one = Polynomial::constant(Integer(1));

    const Polynomial A = two * v - r + a;
    const Polynomial B = two * v - r + b;
    const Polynomial brace = A.pow(2) + A * B + B.pow(2) - two * A - two * B - one;
    MonomialCoefficients out;
    out.full = (b - a).pow(2) * A * B * brace;
    for (const auto& [e, c] : out.full.terms()) {
        Polynomial term;
        term += Polynomial::constant(c) * Polynomial::variable(2, e[2]) *
                Polynomial::variable(3, e[3]);
        auto [it, inserted] = out.by_ab.emplace(std::make_pair(e[0], e[1]), term);
        if (!inserted) it->second += term;
    }
    return out;
}

Rational correlation_summand(int r, int v, int a, int b) {
    if (r < 1 || a < 0 || a > r || b < 0 || b > r)
        throw std::invalid_argument("correlation_summand: indices out of range");
    const Rational A = rat(2L * v - r + a);
    const Rational B = rat(2L * v - r + b);
    const Rational diff = rat(b - a);
    Rational value = diff * diff * A * B *
                     (A * A + A * B + B * B - rat(2) * A - rat(2) * B - rat(1));
    Rational wt = Rational(factorial(r + a - 1) * factorial(r + b - 1)) /
                  Rational(factorial(2 * a) * factorial(r - a) * factorial(2 * b) *
                           factorial(r - b));
    value *= wt;
    if ((a + b) % 2 != 0) value = -value;
    return value;
}

Rational omega_double_sum(int r, int v) {
    if (r < 1 || v < 1) throw std::invalid_argument("omega_double_sum: need r, v >= 1");
    // Route 1: raw double sum.
    Rational raw(0);
    for (int a = 0; a <= r; ++a) {
        for (int b = 0; b <= r; ++b) raw += correlation_summand(r, v, a, b);
    }
    raw *= make_rational(r, 24);
    raw = abs(raw);

    // Route 2: separated via monomial coefficients and moments.
    static const MonomialCoefficients coeffs = expand_coefficients();
    std::array<Rational, 6> s;
    const Rational quarter = make_rational(1, 4);
    for (int k = 0; k <= 5; ++k) s[static_cast<std::size_t>(k)] = moment_direct(k, r, quarter);
    Rational separated(0);
    const std::array<Rational, 4> point{rat(0), rat(0), rat(r), rat(v)};
    for (const auto& [lm, poly] : coeffs.by_ab) {
        separated += poly.evaluate(point) * s[static_cast<std::size_t>(lm.first)] *
                     s[static_cast<std::size_t>(lm.second)];
    }
    separated /= rat(24L * r);
    separated = abs(separated);

    if (raw != separated)
        throw std::logic_error("omega_double_sum: double-sum and moment routes disagree");
    return raw;
}

Rational omega_exact(int r, int v) {
    if (r < 1 || v < 1) throw std::invalid_argument("omega_exact: need r, v >= 1");
    const long R = r, V = v;
    switch (r % 3) {
        case 0:
            return Rational(R * (R - 3 * V) * (2 * R - 3 * V) *
                            (4 * R * R - 12 * R * V + 12 * V * V - 8 * R + 16 * V + 3)) /
                   rat(81);
        case 1:
            return Rational((2 * R + 1) * (R - 3 * V - 1) * (4 * R - 6 * V - 1) *
                            (2 * R * R - 6 * R * V + 6 * V * V - R - V)) /
                   rat(162);
        default:
            return Rational((2 * R - 1) * (2 * R - 6 * V - 1) * (2 * R - 3 * V - 1) *
                            (2 * R * R - 6 * R * V + 6 * V * V + 2 * R - V)) /
                   rat(162);
    }
}

Rational omega_master_form(int r, int v) {
    if (r < 1 || v < 1) throw std::invalid_argument("omega_master_form: need r, v >= 1");
    const Rational R = rat(r), V = rat(v);
    const TrigValue t2r = trig_at(2L * r);
    const Rational cos2 = t2r.cos_value;           // cos(2 r pi / 3)
    const Rational sin2 = t2r.sin_over_sqrt3;      // sin(2 r pi / 3) / sqrt(3)

    // S = A + B cos(2 r pi/3) + C sin(2 r pi/3)/sqrt(3); the three
    // polynomials come from separating the moment products into their
    // constant and double-angle parts.
    const Rational A = -make_rational(4, 27) * R * R *
                       (rat(6) * V + rat(1) - rat(4) * R) *
                       (rat(6) * V + rat(1) - rat(2) * R) *
                       (rat(2) * R * R - rat(6) * R * V - R + rat(6) * V * V +
                        rat(2) * V - rat(1));
    const Rational B = -make_rational(4, 27) * R * R *
                       (rat(4) * V + rat(1) - rat(2) * R) *
                       (rat(6) * R * R - rat(36) * R * V - rat(3) * R +
                        rat(36) * V * V + rat(6) * V + rat(1));
    const Rational C = make_rational(4, 27) * R *
                       (rat(12) * R * R * R * R - rat(12) * R * R * R -
                        rat(216) * R * R * V * V - rat(12) * R * R * V + rat(5) * R * R +
                        rat(432) * R * V * V * V + rat(108) * R * V * V - rat(6) * R * V -
                        R - rat(216) * V * V * V * V - rat(72) * V * V * V +
                        rat(6) * V * V + rat(2) * V);

    Rational s = A + B * cos2 + C * sin2;
    s /= rat(24L * r);
    return abs(s);
}

double omega_asymptotic(int r, int v) {
    if (r < 1 || v < 1) throw std::invalid_argument("omega_asymptotic: need r, v >= 1");
    if (3L * v - 2L * r < 0)
        throw std::domain_error("omega_asymptotic: gap outside the angle (3v - 2r < 0)");
    const double R = r, V = v;
    return 4.0 / 81.0 * R * (3 * V - R) * (3 * V - 2 * R) * (R * R - 3 * R * V + 3 * V * V);
}

ImagePoint reflect_in_l2(const ImagePoint& pt) { return ImagePoint{-pt.p, pt.q}; }

ImagePoint reflect_in_l1(const ImagePoint& pt) {
    // Reflection across the line through the corner at -30 degrees:
    // (p, q*sqrt3) -> ((p - 3q)/2, (-(p + q)/2) * sqrt3).
    Integer pn = pt.p - 3 * pt.q;
    Integer qn = -(pt.p + pt.q);
    if (mpz_odd_p(pn.get_mpz_t()) || mpz_odd_p(qn.get_mpz_t()))
        throw std::domain_error("reflect_in_l1: image not on the half-integer lattice");
    return ImagePoint{pn / 2, qn / 2};
}

Integer ImageConfiguration::squared_distance(int i, int j) const {
    const auto& a = points[static_cast<std::size_t>(i)];
    const auto& b = points[static_cast<std::size_t>(j)];
    const Integer dp = a.p - b.p;
    const Integer dq = a.q - b.q;
    return dp * dp + 3 * dq * dq;
}

double ImageConfiguration::distance(int i, int j) const {
    return std::sqrt(squared_distance(i, j).get_d());
}

ImageConfiguration image_configuration(int r, int v) {
    if (r < 1 || v < 1) throw std::invalid_argument("image_configuration: need r, v >= 1");
    ImageConfiguration cfg;
    cfg.r = r;
    cfg.v = v;
    const long R = r, V = v;
    const ImagePoint o1{Integer(3 * V - 2 * R), Integer(-V)};
    const ImagePoint o2 = reflect_in_l1(o1);
    const ImagePoint o3 = reflect_in_l2(o1);
    const ImagePoint o4 = reflect_in_l2(o2);
    const ImagePoint o5 = reflect_in_l1(o3);
    const ImagePoint o6 = reflect_in_l1(o4);
    cfg.points = {o1, o2, o3, o4, o5, o6};
    return cfg;
}

namespace {

double log_of_integer(const Integer& value) {
    signed long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

DistanceProductCheck distance_product_check(int r, int v) {
    if (3L * v - 2L * r <= 0)
        throw std::domain_error("distance_product_check: need 3v - 2r > 0");
    const ImageConfiguration cfg = image_configuration(r, v);

    DistanceProductCheck out;
    out.lhs = omega_asymptotic(r, v);

    // Cube root of the product of the 15 pairwise distances, accumulated in
    // floating point.
    double log_dist = 0;
    Integer sq_product(1);
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            log_dist += 0.5 * std::log(cfg.squared_distance(i, j).get_d());
            sq_product *= cfg.squared_distance(i, j);
        }
    }
    out.rhs_cbrt = std::exp(log_dist / 3.0) / 1944.0;

    // Same quantity via charge-2 exponents: every pair contributes
    // d^{(1/2)*2*2} = d^2, and the whole product sits under a sixth root.
    out.rhs_sixth = std::exp(log_of_integer(sq_product) / 6.0) / 1944.0;

    out.rel_error = std::abs(out.rhs_cbrt - out.lhs) / std::abs(out.lhs);
    return out;
}

Rational finite_n_correlation(long n, int r, int v) {
    if (n < 4 || r < 1 || v < 1)
        throw std::invalid_argument("finite_n_correlation: need n >= 4, r, v >= 1");
    if (2L * v - r > n)
        throw std::domain_error("finite_n_correlation: gap does not fit at this n");
    const Rational normalizer = dent_pair_form(n, 1, 3);
    Rational total(0);
    for (int a = 0; a <= r; ++a) {
        for (int b = a + 1; b <= r; ++b) {
            const long ia = 2L * v - r + a;
            const long jb = 2L * v - r + b;
            if (ia < 1 || jb > n) continue;
            Rational wt = Rational(factorial(r + a - 1) * factorial(r + b - 1)) /
                          Rational(factorial(2 * a) * factorial(r - a) * factorial(2 * b) *
                                   factorial(r - b));
            Rational term = wt * rat(b - a) *
                            dent_pair_form(n, static_cast<int>(ia), static_cast<int>(jb));
            if ((a + b) % 2 != 0) term = -term;
            total += term;
        }
    }
    total *= rat(2L * r);
    return abs(total) / normalizer;
}

CorrelationReport correlate(int r, int v) {
    CorrelationReport rep;
    rep.r = r;
    rep.v = v;
    rep.exact_value = omega_exact(r, v);

    // Recompute the signed double sum for the diagnostic sign field.
    Rational raw(0);
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= r; ++b) raw += correlation_summand(r, v, a, b);
    rep.sum_sign = sgn(raw);
    rep.double_sum_value = omega_double_sum(r, v);
    if (rep.double_sum_value != abs(rep.exact_value) ||
        omega_master_form(r, v) != rep.double_sum_value)
        throw std::logic_error("correlate: exact and double-sum values disagree");

    const long interior = 3L * v - 2L * r;
    rep.interior = interior > 0;
    if (interior >= 0) rep.asymptotic_value = omega_asymptotic(r, v);
    if (rep.interior) {
        rep.distance_check = distance_product_check(r, v);
        rep.has_distance_check = true;
        if (rep.asymptotic_value != 0)
            rep.asymptotic_ratio = rep.exact_value.get_d() / rep.asymptotic_value;
    }
    return rep;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

using ordered_json = nlohmann::ordered_json;

ordered_json report_json(const CorrelationReport& rep) {
    ordered_json j;
    j["R"] = rep.r;
    j["v"] = rep.v;
    j["exact"] = to_string(rep.exact_value);
    j["double_sum"] = to_string(rep.double_sum_value);
    j["sum_sign"] = rep.sum_sign;
    j["interior"] = rep.interior;
    if (3L * rep.v - 2L * rep.r >= 0) {
        j["asymptotic"] = rep.asymptotic_value;
        if (rep.interior) j["asymptotic_ratio"] = rep.asymptotic_ratio;
    }
    if (rep.has_distance_check) {
        j["distance_check"] = ordered_json{{"lhs", rep.distance_check.lhs},
                                           {"rhs_cbrt", rep.distance_check.rhs_cbrt},
                                           {"rhs_sixth", rep.distance_check.rhs_sixth},
                                           {"rel_error", rep.distance_check.rel_error}};
    }
    if (!rep.finite_n_samples.empty()) {
        ordered_json samples = ordered_json::array();
        for (const auto& [n, value] : rep.finite_n_samples) {
            samples.push_back(ordered_json{{"n", n}, {"value", to_string(value)}});
        }
        j["finite_n"] = samples;
    }
    return j;
}

}  // namespace

std::string report_to_json(const CorrelationReport& rep) { return report_json(rep).dump(2); }

std::string report_to_plain(const CorrelationReport& rep) {
    std::string out;
    out += "correlation R=" + std::to_string(rep.r) + " v=" + std::to_string(rep.v) + "\n";
    out += "  exact        = " + to_string(rep.exact_value) + "\n";
    out += "  double sum   = " + to_string(rep.double_sum_value) +
           " (sign " + std::to_string(rep.sum_sign) + ")\n";
    if (3L * rep.v - 2L * rep.r >= 0) {
        out += "  asymptotic   = " + format_double(rep.asymptotic_value) + "\n";
        if (rep.interior)
            out += "  exact/asympt = " + format_double(rep.asymptotic_ratio) + "\n";
    } else {
        out += "  asymptotic   = (omitted: gap outside the angle)\n";
    }
    if (rep.has_distance_check) {
        out += "  image check  : lhs = " + format_double(rep.distance_check.lhs) +
               ", cbrt = " + format_double(rep.distance_check.rhs_cbrt) +
               ", sixth = " + format_double(rep.distance_check.rhs_sixth) +
               ", rel err = " + format_double(rep.distance_check.rel_error) + "\n";
    }
    for (const auto& [n, value] : rep.finite_n_samples) {
        out += "  finite n=" + std::to_string(n) + ": " + to_string(value) + " ~ " +
               format_double(Rational(value).get_d()) + "\n";
    }
    return out;
}

std::string report_to_csv(const CorrelationReport& rep) {
    std::string out = "R,v,exact,double_sum,sum_sign,interior,asymptotic,rel_error\n";
    out += std::to_string(rep.r) + "," + std::to_string(rep.v) + "," +
           to_string(rep.exact_value) + "," + to_string(rep.double_sum_value) + "," +
           std::to_string(rep.sum_sign) + "," + (rep.interior ? "1" : "0") + ",";
    if (3L * rep.v - 2L * rep.r >= 0) out += format_double(rep.asymptotic_value);
    out += ",";
    if (rep.has_distance_check) out += format_double(rep.distance_check.rel_error);
    out += "\n";
    return out;
}

CorrelationReport report_from_json(const std::string& text) {
    const auto j = ordered_json::parse(text);
    CorrelationReport rep;
    rep.r = j.at("R").get<int>();
    rep.v = j.at("v").get<int>();
    rep.exact_value = parse_rational(j.at("exact").get<std::string>());
    rep.double_sum_value = parse_rational(j.at("double_sum").get<std::string>());
    rep.sum_sign = j.at("sum_sign").get<int>();
    rep.interior = j.at("interior").get<bool>();
    if (j.contains("asymptotic")) rep.asymptotic_value = j.at("asymptotic").get<double>();
    if (j.contains("asymptotic_ratio")) rep.asymptotic_ratio = j.at("asymptotic_ratio").get<double>();
    if (j.contains("distance_check")) {
        const auto& d = j.at("distance_check");
        rep.distance_check = DistanceProductCheck{
            d.at("lhs").get<double>(), d.at("rhs_cbrt").get<double>(),
            d.at("rhs_sixth").get<double>(), d.at("rel_error").get<double>()};
        rep.has_distance_check = true;
    }
    if (j.contains("finite_n")) {
        for (const auto& s : j.at("finite_n")) {
            rep.finite_n_samples.emplace_back(s.at("n").get<long>(),
                                              parse_rational(s.at("value").get<std::string>()));
        }
    }
    return rep;
}

}  // namespace lozenge
