#include "doctest.h"

#include <algorithm>
#include <random>

#include "nagata/expr.hpp"
#include "nagata/factor.hpp"
#include "nagata/random.hpp"

using namespace nagata;

namespace {

PolyZ Zc(long c) { return PolyZ::constant(Integer(c)); }

bool naive_is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d < n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Exhaustive search for a divisor of degree 1..deg/2 with coefficients in
// [-bound, bound]; independent of the Kronecker engine.
bool has_small_divisor(const PolyZ& p, long bound) {
    const std::size_t n = p.degree();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::vector<long> digits(d + 1, -bound);
        while (true) {
            std::vector<Integer> c(digits.begin(), digits.end());
            const PolyZ q(std::move(c));
            if (!q.is_zero() && q.size() == d + 1 && divides(q, p)) return true;
            std::size_t i = 0;
            while (i <= d && digits[i] == bound) digits[i++] = -bound;
            if (i > d) break;
            ++digits[i];
        }
    }
    return false;
}

PolyZ parse_z(const char* s) { return std::get<PolyZ>(parse_expr(s)); }

} // namespace

TEST_CASE("factor_integer") {
    const auto f12 = factor_integer(Integer(12));
    CHECK(f12.unit == Integer(1));
    CHECK(f12.factors == std::vector<Integer>{2, 2, 3});
    const auto f8 = factor_integer(Integer(-8));
    CHECK(f8.unit == Integer(-1));
    CHECK(f8.factors == std::vector<Integer>{2, 2, 2});
    const auto f1 = factor_integer(Integer(1));
    CHECK(f1.unit == Integer(1));
    CHECK(f1.factors.empty());
    CHECK_THROWS_WITH(factor_integer(Integer(0)), "cannot factor zero");

    RandomElements rnd(1, "factor-integer");
    for (int t = 0; t < 200; ++t) {
        const Integer n = rnd.nonzero_integer(5000);
        const auto f = factor_integer(n);
        CHECK(f.value() == n);
        for (const Integer& p : f.factors) CHECK(naive_is_prime(p.to_long()));
        CHECK(std::is_sorted(f.factors.begin(), f.factors.end()));
    }
    const Integer big = Integer(1000003) * Integer(999983);
    CHECK(factor_integer(big).factors == std::vector<Integer>{999983, 1000003});
}

TEST_CASE("kronecker_factor") {
    const auto a = kronecker_factor(PolyZ{-1, 0, 1});
    CHECK(a.unit == Zc(1));
    CHECK(a.factors == std::vector<PolyZ>{PolyZ{-1, 1}, PolyZ{1, 1}});

    const PolyZ x2p1{1, 0, 1};
    const auto b = kronecker_factor(x2p1);
    CHECK(b.factors == std::vector<PolyZ>{x2p1});
    CHECK_FALSE(has_small_divisor(x2p1, 5));

    const auto c = kronecker_factor(PolyZ::variable());
    CHECK(c.factors == std::vector<PolyZ>{PolyZ::variable()});

    CHECK_THROWS_AS(kronecker_factor(PolyZ{2, 2}), DomainError);
    CHECK_THROWS_AS(kronecker_factor(PolyZ()), DomainError);

    // Factors without integer roots: (2X^2 + 3)(3X^2 - X + 5).
    const PolyZ g{3, 0, 2}, h{5, -1, 3};
    const auto d = kronecker_factor(g * h);
    CHECK(d.factors == std::vector<PolyZ>{g, h});

    const auto e = kronecker_factor(-(PolyZ{1, 1} * PolyZ{1, 1} * PolyZ{-2, 3}));
    CHECK(e.unit == Zc(-1));
    CHECK(e.factors == std::vector<PolyZ>{PolyZ{1, 1}, PolyZ{1, 1}, PolyZ{-2, 3}});
}

TEST_CASE("kronecker limits") {
    std::vector<Integer> c(18, Integer(1));
    CHECK_THROWS_AS(kronecker_factor(PolyZ(c)), LimitError);
    CHECK_THROWS_AS(kronecker_factor(PolyZ{Integer(1), Integer(2'000'000)}), LimitError);
}

TEST_CASE("factor_poly_ZX") {
    const auto a = factor_poly_ZX(PolyZ{2, 2});
    CHECK(a.unit == Zc(1));
    CHECK(a.factors == std::vector<PolyZ>{Zc(2), PolyZ{1, 1}});
    CHECK(factor_poly_ZX(Zc(4)).factors == std::vector<PolyZ>{Zc(2), Zc(2)});
    CHECK(factor_poly_ZX(PolyZ{-1, 0, 1}).factors == std::vector<PolyZ>{PolyZ{-1, 1}, PolyZ{1, 1}});
    const auto n = factor_poly_ZX(PolyZ{0, -12});
    CHECK(n.unit == Zc(-1));
    CHECK(n.factors == std::vector<PolyZ>{Zc(2), Zc(2), Zc(3), PolyZ::variable()});
    CHECK_THROWS_AS(factor_poly_ZX(PolyZ()), DomainError);
}

TEST_CASE("factor_poly_QX") {
    const PolyQ x2m1 = to_rational(PolyZ{-1, 0, 1});
    const auto a = factor_poly_QX(x2m1);
    CHECK(a.unit == PolyQ::one());
    CHECK(a.factors == std::vector<PolyQ>{to_rational(PolyZ{-1, 1}), to_rational(PolyZ{1, 1})});
    const auto b = factor_poly_QX(to_rational(PolyZ{2, 2}));
    CHECK(b.unit == PolyQ::constant(Rational(2)));
    CHECK(b.factors == std::vector<PolyQ>{to_rational(PolyZ{1, 1})});
    const PolyQ half_x{Rational(0), Rational(Integer(1), Integer(2))};
    const auto c = factor_poly_QX(half_x);
    CHECK(c.unit == PolyQ::constant(Rational(Integer(1), Integer(2))));
    CHECK(c.factors == std::vector<PolyQ>{PolyQ::variable()});
    // (X/2 + 1/3)(X - 1) has monic factors X + 2/3 and X - 1.
    const PolyQ p = PolyQ{Rational(Integer(1), Integer(3)), Rational(Integer(1), Integer(2))} * to_rational(PolyZ{-1, 1});
    const auto d = factor_poly_QX(p);
    CHECK(d.value() == p);
    CHECK(d.factors.size() == 2);
}

TEST_CASE("irreducibility predicates") {
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(-7)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK_FALSE(is_irreducible(Integer(0)));
    CHECK_FALSE(is_irreducible(PolyZ{0, 0, 1}));
    CHECK(is_prime(PolyZ{1, 0, 1}));
    CHECK(is_prime(Zc(3)));
    CHECK_FALSE(is_prime(PolyZ{2, 2}));
    CHECK_FALSE(is_irreducible(PolyQ::constant(Rational(2))));
    CHECK(is_irreducible(to_rational(PolyZ{2, 2})));
}

TEST_CASE("check_factorization_unique") {
    using F = PrimeFactorization<Integer>;
    const auto swap = check_factorization_unique(F{1, {2, 3}}, F{1, {3, 2}});
    REQUIRE(swap.has_value());
    CHECK(swap->pairing == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}});
    CHECK(check_factorization_unique(F{1, {2, 3}}, F{1, {-2, -3}}).has_value());
    CHECK_FALSE(check_factorization_unique(F{1, {2, 3}}, F{1, {2, 2}}).has_value());
    CHECK_FALSE(check_factorization_unique(F{1, {2, 3}}, F{-1, {2, 3}}).has_value());
    CHECK_THROWS_WITH(check_factorization_unique(F{1, {4}}, F{1, {2, 2}}), "not a factorization into irreducibles");
}

TEST_CASE("base engine properties on random inputs") {
    RandomElements rnd(99, "base-properties");
    for (int t = 0; t < 60; ++t) {
        const PolyZ p = rnd.nonzero_poly_z(4, 9);
        const auto f = factor_poly_ZX(p);
        CHECK(f.value() == p);
        for (const PolyZ& q : f.factors) {
            CHECK(factor_poly_ZX(q).factors.size() == 1);
            CHECK(canonical(q) == q);
        }
        auto shuffled = f;
        std::shuffle(shuffled.factors.begin(), shuffled.factors.end(), rnd.engine());
        CHECK(check_factorization_unique(f, shuffled).has_value());

        const PolyZ q = rnd.nonzero_poly_z(3, 9);
        CHECK(content(p * q) == content(p) * content(q));

        if (!p.is_constant()) {
            const auto fq = factor_poly_QX(to_rational(p));
            std::vector<PolyQ> expected;
            for (const PolyZ& g : f.factors) {
                if (!g.is_constant()) expected.push_back(canonical(to_rational(g)));
            }
            std::sort(expected.begin(), expected.end(),
                      [](const PolyQ& a, const PolyQ& b) { return canonical_compare(a, b) < 0; });
            CHECK(fq.factors == expected);
            CHECK(fq.value() == to_rational(p));
        }
    }
}

TEST_CASE("factor_bivariate") {
    const PolyPolyZ xy_plus_x = std::get<PolyPolyZ>(parse_expr("X*Y + X"));
    const auto a = factor_bivariate(xy_plus_x);
    CHECK(a.factors == std::vector<PolyPolyZ>{PolyPolyZ::constant(PolyZ::variable()), PolyPolyZ{Zc(1), Zc(1)}});

    const auto b = factor_bivariate(std::get<PolyPolyZ>(parse_expr("Y^2 - 1")));
    CHECK(b.factors == std::vector<PolyPolyZ>{PolyPolyZ{Zc(-1), Zc(1)}, PolyPolyZ{Zc(1), Zc(1)}});

    const PolyPolyZ g = std::get<PolyPolyZ>(parse_expr("X*Y^2 + 2*Y - X^2 + 3"));
    const PolyPolyZ h = std::get<PolyPolyZ>(parse_expr("(X+1)*Y - 2*X"));
    const auto c = factor_bivariate(g * h * PolyPolyZ::constant(PolyZ{0, 2}));
    CHECK(c.value() == g * h * PolyPolyZ::constant(PolyZ{0, 2}));
    CHECK(c.factors.size() == 4);
    CHECK(check_factorization_unique(
        c, PrimeFactorization<PolyPolyZ>{PolyPolyZ::one(), {PolyPolyZ::constant(Zc(2)), PolyPolyZ::constant(PolyZ::variable()), g, h}}));

    CHECK_THROWS_AS(factor_bivariate(std::get<PolyPolyZ>(parse_expr("Y^5 + X"))), LimitError);
    CHECK_THROWS_AS(factor_bivariate(std::get<PolyPolyZ>(parse_expr("Y + X^5"))), LimitError);
}

TEST_CASE("factor_poly_FracZX") {
    // (X*Y + 1)(Y - X) / X over Frac(Z[X]).
    const PolyPolyZ g = std::get<PolyPolyZ>(parse_expr("(X*Y + 1)*(Y - X)"));
    PolyRatFun p = map_coefficients<RationalFunction>(g, [](const PolyZ& c) { return RationalFunction(c, PolyZ::variable()); });
    const auto f = factor_poly_FracZX(p);
    CHECK(f.value() == p);
    REQUIRE(f.factors.size() == 2);
    for (const auto& m : f.factors) CHECK(m.leading() == RationalFunction::one());
}
