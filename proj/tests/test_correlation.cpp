#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "lozenge/correlation.hpp"
#include "lozenge/enumerate.hpp"
#include "lozenge/formulas.hpp"

using namespace lozenge;

TEST_SUITE_BEGIN("correlation");

TEST_CASE("dent-pair ratio limit") {
    CHECK(e_ratio_limit(1, 3) == 1);
    CHECK(e_ratio_limit(1, 2) == 0);
    CHECK(e_ratio_limit(2, 5) == 30);
}

TEST_CASE("one-dent ratio matches the count ratio") {
    for (int n = 2; n <= 20; ++n)
        for (int i = 1; i <= std::min(n, 6); ++i)
            CHECK(f_ratio(n, i) ==
                  Rational(f_count(n, 1, i)) / Rational(f_count(n, 1, 1)));
}

TEST_CASE("finite dent-pair ratio matches the count ratio") {
    for (int n = 4; n <= 12; ++n) {
        for (int i = 1; i <= std::min(4, n - 1); ++i) {
            for (int j = i + 1; j <= std::min(5, n); ++j) {
                CHECK(e_ratio_finite(n, i, j) ==
                      Rational(e_count(n, 1, i, j)) / Rational(e_count(n, 1, 1, 3)));
            }
        }
    }
    for (int n = 4; n <= 40; n += 9) {
        CHECK(e_ratio_finite(n, 1, 3) == 1);
        CHECK(e_ratio_finite(n, 1, 2) == 0);
    }
}

TEST_CASE("finite dent-pair ratio approaches the limit") {
    const double target = Rational(e_ratio_limit(2, 5)).get_d();
    const double at100 = e_ratio_finite(100, 2, 5).get_d();
    const double at1000 = e_ratio_finite(1000, 2, 5).get_d();
    CHECK(std::abs(at1000 - target) < std::abs(at100 - target));
    CHECK(std::abs(at100 / target - 1) < 1e-2);
}

TEST_CASE("moments: direct evaluation") {
    CHECK(moment_direct(0, 0, make_rational(1, 4)) == 1);
    CHECK(moment_direct(0, 0, make_rational(9, 7)) == 1);
    CHECK(moment_direct(0, 3, make_rational(1, 4)) == -1);
    CHECK(moment_direct(1, 2, make_rational(1, 4)) == -1);
}

TEST_CASE("moments: closed forms agree with direct sums") {
    const Rational quarter = make_rational(1, 4);
    for (int k = 0; k <= 5; ++k)
        for (int r = 0; r <= 30; ++r)
            CHECK(moment_closed(k, r) == moment_direct(k, r, quarter));
}

TEST_CASE("descending moments and falling-factorial conversion") {
    const Rational quarter = make_rational(1, 4);
    for (int k = 0; k <= 5; ++k)
        for (int r = 0; r <= 20; ++r)
            CHECK(descending_moment_closed(k, r) == descending_moment_direct(k, r, quarter));
    // i^k as a combination of falling factorials (Stirling numbers)
    const long stirling[6][6] = {{1, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0},
                                 {0, 1, 1, 0, 0, 0},  {0, 1, 3, 1, 0, 0},
                                 {0, 1, 7, 6, 1, 0},  {0, 1, 15, 25, 10, 1}};
    for (int k = 0; k <= 5; ++k) {
        for (int r = 0; r <= 12; ++r) {
            Rational combo(0);
            for (int m = 0; m <= k; ++m)
                combo += Rational(stirling[k][m]) * descending_moment_closed(m, r);
            CHECK(combo == moment_closed(k, r));
        }
    }
}

TEST_CASE("monomial expansion") {
    const MonomialCoefficients mc = expand_coefficients();
    CHECK(mc.monomial_count() == 120);
    // spot terms
    CHECK(mc.full.coefficient({5, 1, 0, 0}) == 1);   // a^5 b
    CHECK(mc.full.coefficient({1, 5, 0, 0}) == 1);   // a b^5
    CHECK(mc.full.coefficient({1, 4, 0, 1}) == 6);   // a b^4 v
    CHECK(mc.full.coefficient({4, 1, 0, 1}) == 6);   // symmetric partner
    CHECK(mc.full.coefficient({3, 1, 0, 0}) == -1);  // -a^3 b
    CHECK(mc.full.coefficient({2, 2, 1, 0}) == -12); // -12 a^2 b^2 r
    CHECK(mc.full.coefficient({1, 4, 1, 0}) == -3);  // -3 a b^4 r
    // symmetry under a <-> b
    for (const auto& [e, c] : mc.full.terms()) {
        CHECK(mc.full.coefficient({e[1], e[0], e[2], e[3]}) == c);
    }
    // re-evaluation against the unexpanded product at random points
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> val(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a(val(rng)), b(val(rng)), r(val(rng)), v(val(rng));
        const Rational A = 2 * v - r + a, B = 2 * v - r + b;
        const Rational direct = (b - a) * (b - a) * A * B *
                                (A * A + A * B + B * B - 2 * A - 2 * B - 1);
        CHECK(mc.full.evaluate({a, b, r, v}) == direct);
    }
    // grouped coefficients reproduce the full expansion
    std::size_t grouped_terms = 0;
    for (const auto& [lm, poly] : mc.by_ab) {
        (void)lm;
        grouped_terms += poly.term_count();
    }
    CHECK(grouped_terms == 120);
}

TEST_CASE("double-sum summand symmetry") {
    for (int r = 1; r <= 6; ++r) {
        for (int v = 1; v <= 5; ++v) {
            for (int a = 0; a <= r; ++a) {
                CHECK(correlation_summand(r, v, a, a) == 0);
                for (int b = 0; b <= r; ++b)
                    CHECK(correlation_summand(r, v, a, b) ==
                          correlation_summand(r, v, b, a));
            }
        }
    }
}

TEST_CASE("correlation spot values") {
    CHECK(omega_exact(1, 2) == 11);
    CHECK(omega_exact(3, 3) == 42);
    CHECK(omega_exact(1, 1) == 0);
    CHECK(omega_exact(3, 2) == 0);
    CHECK(omega_exact(2, 3) == 45);
    CHECK(omega_exact(2, 2) == omega_double_sum(2, 2));
}

TEST_CASE("double sum equals the closed form") {
    for (int r = 1; r <= 8; ++r)
        for (int v = 1; v <= 8; ++v) CHECK(omega_double_sum(r, v) == abs(omega_exact(r, v)));
}

TEST_CASE("master trig form equals the residue branches") {
    for (int r = 1; r <= 30; ++r)
        for (int v = 1; v <= 12; ++v) CHECK(omega_master_form(r, v) == abs(omega_exact(r, v)));
}

TEST_CASE("branch factorization: product form equals expanded polynomial") {
    // Each residue branch is a product of linear/quadratic factors; evaluate
    // the expanded polynomial form against the factored form.
    const Polynomial R = Polynomial::variable(2), V = Polynomial::variable(3);
    auto c = [](long k) { return Polynomial::constant(Integer(k)); };
    const Polynomial branch0 = R * (R - c(3) * V) * (c(2) * R - c(3) * V) *
                               (c(4) * R * R - c(12) * R * V + c(12) * V * V - c(8) * R +
                                c(16) * V + c(3));
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> val(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        const long r = val(rng), v = val(rng);
        const Rational direct = Rational(r) * Rational(r - 3 * v) * Rational(2 * r - 3 * v) *
                                Rational(4 * r * r - 12 * r * v + 12 * v * v - 8 * r + 16 * v + 3);
        CHECK(branch0.evaluate({Rational(0), Rational(0), Rational(r), Rational(v)}) == direct);
    }
    for (int r = 3; r <= 30; r += 3)
        for (int v = 1; v <= 10; ++v)
            CHECK(branch0.evaluate({Rational(0), Rational(0), Rational(r), Rational(v)}) ==
                  Rational(81) * omega_exact(r, v));
}

TEST_CASE("image configuration") {
    const ImageConfiguration cfg = image_configuration(3, 4);
    CHECK(cfg.points[0] == ImagePoint{Integer(6), Integer(-4)});
    CHECK(cfg.squared_distance(0, 1) == 36);    // d = 2R = 6
    CHECK(cfg.squared_distance(0, 2) == 144);   // d = 2(3v-2R) = 12
    CHECK(cfg.squared_distance(0, 5) == 324);   // d = 2(3v-R) = 18
    CHECK(cfg.squared_distance(0, 3) == cfg.squared_distance(0, 4));
    CHECK(cfg.squared_distance(0, 3) == 252);   // 12(R^2 - 3Rv + 3v^2)

    for (int r = 1; r <= 6; ++r) {
        for (int v = 1; v <= 6; ++v) {
            const ImageConfiguration c2 = image_configuration(r, v);
            const long R = r, V = v;
            CHECK(c2.squared_distance(0, 1) == Integer(4 * R * R));
            CHECK(c2.squared_distance(0, 2) == Integer(4 * (3 * V - 2 * R) * (3 * V - 2 * R)));
            CHECK(c2.squared_distance(0, 5) == Integer(4 * (3 * V - R) * (3 * V - R)));
            CHECK(c2.squared_distance(0, 3) ==
                  Integer(12 * (R * R - 3 * R * V + 3 * V * V)));
            // reflection closure: the last image is reachable both ways
            CHECK(reflect_in_l1(c2.points[3]) == c2.points[5]);
            CHECK(reflect_in_l2(c2.points[4]) == c2.points[5]);
            // reflections are involutions
            for (const auto& p : c2.points) {
                CHECK(reflect_in_l1(reflect_in_l1(p)) == p);
                CHECK(reflect_in_l2(reflect_in_l2(p)) == p);
            }
        }
    }
}

TEST_CASE("pairwise distances invariant under swapping the two mirrors") {
    for (int r = 1; r <= 5; ++r) {
        for (int v = 1; v <= 5; ++v) {
            const ImageConfiguration cfg = image_configuration(r, v);
            std::array<ImagePoint, 6> swapped;
            for (std::size_t i = 0; i < 6; ++i) {
                // conjugating by the angle bisector exchanges the roles of
                // the two boundary lines
                swapped[i] = reflect_in_l2(reflect_in_l1(reflect_in_l2(cfg.points[i])));
            }
            std::multiset<Integer> before, after;
            for (int i = 0; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) {
                    before.insert(cfg.squared_distance(i, j));
                    ImageConfiguration tmp = cfg;
                    tmp.points = swapped;
                    after.insert(tmp.squared_distance(i, j));
                }
            }
            CHECK(before == after);
        }
    }
}

TEST_CASE("distance product check") {
    CHECK(distance_product_check(3, 4).rel_error < 1e-9);
    CHECK(distance_product_check(10, 15).rel_error < 1e-9);
    const DistanceProductCheck d = distance_product_check(7, 9);
    CHECK(std::abs(d.rhs_cbrt - d.rhs_sixth) <= 1e-12 * std::abs(d.rhs_cbrt));
    CHECK_THROWS_AS(distance_product_check(3, 2), std::domain_error);
}

TEST_CASE("asymptotics") {
    CHECK(omega_asymptotic(2, 2) > 0);
    CHECK(omega_asymptotic(3, 2) == 0);  // boundary line 3v = 2R
    CHECK_THROWS_AS(omega_asymptotic(4, 2), std::domain_error);
    // ratio trend along the ray (R, v) = (3t, 4t)
    double prev = 1e9;
    for (int t = 10; t <= 100; t += 10) {
        const double ratio =
            omega_exact(3 * t, 4 * t).get_d() / omega_asymptotic(3 * t, 4 * t);
        CHECK(std::abs(ratio - 1) < std::abs(prev - 1) + 1e-12);
        prev = ratio;
    }
    CHECK(std::abs(prev - 1) < 0.01);
}

TEST_CASE("asymptotic error decays like 1/R along rays") {
    // v = rho R for rho in {1, 4/3, 2}; R runs over multiples of the
    // denominator so v stays integral.
    const std::array<std::pair<int, int>, 3> rays{{{1, 1}, {4, 3}, {2, 1}}};
    for (const auto& [rn, rd] : rays) {
        double fitted_c = -1;  // fit C once, at the first grid point R = 30 rd
        double prev_err = 1e9;
        for (int r = 30 * rd; r <= 300; r += 30 * rd) {
            const int v = (r / rd) * rn;
            const double err =
                std::abs(omega_exact(r, v).get_d() / omega_asymptotic(r, v) - 1);
            if (fitted_c < 0) fitted_c = err * r;
            CHECK(err <= fitted_c / r + 1e-12);
            CHECK(err <= prev_err + 1e-12);
            prev_err = err;
        }
    }
}

TEST_CASE("finite-n correlation") {
    // small-n cross-check against the Laplace count over formula E-counts
    for (int n = 8; n <= 12; n += 2) {
        for (const auto& [r, v] : std::array<std::pair<int, int>, 3>{{{1, 2}, {2, 2}, {2, 3}}}) {
            const ECountFn e_fn = [n](int i, int j) { return e_count(n, 1, i, j); };
            const Rational direct = Rational(count_gapped(n, r, v, e_fn)) /
                                    Rational(e_count(n, 1, 1, 3));
            CHECK(finite_n_correlation(n, r, v) == direct);
        }
    }
    // approach to the limit value
    const Rational exact = omega_exact(2, 3);
    const Rational at50 = finite_n_correlation(50, 2, 3);
    const Rational at500 = finite_n_correlation(500, 2, 3);
    CHECK(abs(at500 - exact) < abs(at50 - exact));
    // a correlation that vanishes in the limit: here the two-dent count
    // E(n,1,1,2) is zero at every n, so the finite ratio is identically 0
    CHECK(finite_n_correlation(40, 1, 1) == 0);
    CHECK(finite_n_correlation(400, 1, 1) == omega_exact(1, 1));
    // minimal n: gap barely fits
    CHECK(finite_n_correlation(4, 1, 2) > 0);
    CHECK_THROWS_AS(finite_n_correlation(4, 1, 3), std::domain_error);
}

TEST_CASE("correlation report serialization") {
    CorrelationReport rep = correlate(2, 3);
    rep.finite_n_samples.emplace_back(50, finite_n_correlation(50, 2, 3));
    const std::string json = report_to_json(rep);
    // byte-determinism
    CHECK(json == report_to_json(rep));
    // parse -> re-emit is idempotent
    const CorrelationReport parsed = report_from_json(json);
    CHECK(report_to_json(parsed) == json);
    CHECK(parsed.exact_value == rep.exact_value);
    CHECK(parsed.finite_n_samples == rep.finite_n_samples);

    const std::string plain = report_to_plain(rep);
    CHECK(plain.find("exact        = 45") != std::string::npos);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.find("2,3,45,45,") != std::string::npos);

    // boundary case: asymptotic fields omitted
    const CorrelationReport boundary = correlate(3, 2);
    CHECK_FALSE(boundary.interior);
    CHECK(report_to_plain(boundary).find("asymptotic   = 0") != std::string::npos);
    const CorrelationReport outside = correlate(4, 2);
    CHECK(report_to_plain(outside).find("omitted") != std::string::npos);
}

TEST_SUITE_END();
