#include "doctest.h"

#include <functional>

#include "nagata/errors.hpp"
#include "nagata/expr.hpp"
#include "nagata/gauss.hpp"
#include "nagata/laurent.hpp"
#include "nagata/poly.hpp"
#include "nagata/random.hpp"
#include "nagata/rational_function.hpp"

using namespace nagata;

namespace {

PolyZ X() { return PolyZ::variable(); }
PolyZ Zc(long c) { return PolyZ::constant(Integer(c)); }

// Brute-force divisor search: every q with deg q <= deg a - deg b and
// coefficients in [-bound, bound], tested by multiplication only.
std::optional<PolyZ> brute_force_quotient(const PolyZ& a, const PolyZ& b, long bound) {
    if (a.is_zero()) return PolyZ();
    if (a.size() < b.size()) return std::nullopt;
    const std::size_t n = a.size() - b.size() + 1;
    std::vector<long> digits(n, -bound);
    while (true) {
        std::vector<Integer> c(digits.begin(), digits.end());
        PolyZ q(std::move(c));
        if (b * q == a) return q;
        std::size_t i = 0;
        while (i < n && digits[i] == bound) digits[i++] = -bound;
        if (i == n) return std::nullopt;
        ++digits[i];
    }
}

template <class R, class Gen>
void check_ring_axioms(Gen&& gen, int trials) {
    for (int t = 0; t < trials; ++t) {
        const R a = gen(), b = gen(), c = gen();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + R::zero() == a);
        CHECK(a * R::one() == a);
        CHECK(a - a == R::zero());
        if (!is_zero(a) && !is_zero(b)) CHECK_FALSE(is_zero(a * b));
    }
}

template <class R, class Gen>
void check_associates(Gen&& gen, const std::vector<R>& units, int trials) {
    for (int t = 0; t < trials; ++t) {
        const R a = gen();
        const auto [u, n] = canonical_associate(a);
        CHECK(is_unit(u));
        CHECK(u * n == a);
        CHECK(canonical(n) == n);
        for (const R& w : units) CHECK(canonical(w * a) == n);
    }
}

} // namespace

TEST_CASE("try_exact_div examples") {
    CHECK(try_exact_div(Integer(12), Integer(3)) == Integer(4));
    CHECK_FALSE(try_exact_div(Integer(5), Integer(2)).has_value());
    const PolyZ x2m1{-1, 0, 1};
    const PolyZ xm1{-1, 1};
    const auto q = try_exact_div(x2m1, xm1);
    REQUIRE(q.has_value());
    CHECK(*q == (PolyZ{1, 1}));
    CHECK(brute_force_quotient(x2m1, xm1, 3) == *q);
    CHECK_THROWS_AS(try_exact_div(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_WITH(try_exact_div(x2m1, PolyZ()), "division by zero");
}

TEST_CASE("canonical_associate examples") {
    const auto a = canonical_associate(Integer(-6));
    CHECK(a.unit == Integer(-1));
    CHECK(a.normal == Integer(6));

    const auto b = canonical_associate(PolyZ{2, -2});
    CHECK(b.unit == Zc(-1));
    CHECK(b.normal == (PolyZ{-2, 2}));

    const PolyQ half_x{Rational(0), Rational(Integer(1), Integer(2))};
    const auto c = canonical_associate(half_x);
    CHECK(c.unit == PolyQ::constant(Rational(Integer(1), Integer(2))));
    CHECK(c.normal == PolyQ::variable());
    CHECK(c.unit * c.normal == half_x);

    CHECK(canonical(PolyZ()) == PolyZ());
    CHECK(canonical(Integer(0)) == Integer(0));
}

TEST_CASE("strip_var_power") {
    const auto [m, q] = strip_var_power(PolyZ{0, 0, 1, 1});
    CHECK(m == 2);
    CHECK(q == (PolyZ{1, 1}));
    CHECK(strip_var_power(X()) == std::pair<std::size_t, PolyZ>{1, Zc(1)});
    CHECK(strip_var_power(Zc(7)) == std::pair<std::size_t, PolyZ>{0, Zc(7)});
    CHECK_THROWS_WITH(strip_var_power(PolyZ()), "zero polynomial");
}

TEST_CASE("laurent_to_poly") {
    const LaurentZ f = LaurentZ::t_power(-1) + LaurentZ::t_power(1);
    const auto [n, p] = laurent_to_poly(f);
    CHECK(n == 1);
    CHECK(p == (PolyZ{1, 0, 1}));
    CHECK(f * LaurentZ::t_power(static_cast<long>(n)) == LaurentZ(p));

    const auto [n2, p2] = laurent_to_poly(LaurentZ(PolyZ{1, 1}));
    CHECK(n2 == 0);
    CHECK(p2 == (PolyZ{1, 1}));
    CHECK(laurent_to_poly(LaurentZ()) == std::pair<std::size_t, PolyZ>{0, PolyZ()});
}

TEST_CASE("is_unit per ring") {
    CHECK(is_unit(Integer(-1)));
    CHECK_FALSE(is_unit(Integer(2)));
    CHECK(is_unit(LaurentZ::t_power(-3)));
    CHECK(LaurentZ::t_power(-3) * LaurentZ::t_power(3) == LaurentZ::one());
    CHECK(is_unit(-LaurentZ::t_power(5)));
    CHECK_FALSE(is_unit(LaurentZ(PolyZ{1, 1})));
    CHECK_FALSE(is_unit(X()));
    CHECK(is_unit(Zc(-1)));
    CHECK_FALSE(is_unit(Zc(2)));
    CHECK(is_unit(PolyQ::constant(Rational(3))));
    CHECK_FALSE(is_unit(PolyQ::variable()));
    CHECK(is_unit(RationalFunction(X(), PolyZ{1, 1})));
}

TEST_CASE("ring axioms and domain law on random triples") {
    RandomElements rnd(20261014, "rings");
    check_ring_axioms<Integer>([&] { return rnd.integer(1000); }, 100);
    check_ring_axioms<Rational>([&] { return Rational(rnd.integer(50), rnd.nonzero_integer(50)); }, 100);
    check_ring_axioms<PolyZ>([&] { return rnd.poly_z(5, 20); }, 100);
    check_ring_axioms<PolyQ>([&] { return rnd.poly_q(4, 9); }, 50);
    check_ring_axioms<LaurentZ>([&] { return rnd.laurent(3, 9); }, 100);
    check_ring_axioms<PolyPolyZ>([&] { return rnd.poly_poly(3, 3, 9); }, 50);
    check_ring_axioms<RationalFunction>([&] { return rnd.rational_function(2, 5); }, 30);
}

TEST_CASE("try_exact_div soundness and completeness against brute force") {
    RandomElements rnd(7, "exact-div");
    for (int t = 0; t < 150; ++t) {
        const PolyZ b = rnd.nonzero_poly_z(2, 2);
        const PolyZ a = rnd.coin() ? b * rnd.poly_z(1, 2) : rnd.poly_z(3, 4);
        const auto q = try_exact_div(a, b);
        if (q) CHECK(b * *q == a);
        // Quotients of these products have coefficients bounded by 2 when
        // they exist with deg <= 1; the brute force uses a wider box.
        if (a.size() <= b.size() + 1) CHECK(q.has_value() == brute_force_quotient(a, b, 4).has_value());
    }
    for (int t = 0; t < 100; ++t) {
        const LaurentZ b = rnd.laurent(2, 3);
        if (b.is_zero()) continue;
        const LaurentZ a = b * rnd.laurent(2, 3);
        const auto q = try_exact_div(a, b);
        REQUIRE(q.has_value());
        CHECK(b * *q == a);
    }
}

TEST_CASE("canonical_associate idempotence and associate pairs") {
    RandomElements rnd(11, "associates");
    check_associates<Integer>([&] { return rnd.integer(100); }, {Integer(1), Integer(-1)}, 50);
    check_associates<PolyZ>([&] { return rnd.poly_z(4, 9); }, {Zc(1), Zc(-1)}, 50);
    check_associates<PolyQ>([&] { return rnd.poly_q(3, 9); },
                            {PolyQ::constant(Rational(Integer(-3), Integer(7))), PolyQ::constant(Rational(5))}, 50);
    check_associates<LaurentZ>([&] { return rnd.laurent(3, 9); },
                               {LaurentZ::t_power(-2), -LaurentZ::t_power(3), LaurentZ::one()}, 50);
    check_associates<PolyPolyZ>([&] { return rnd.poly_poly(2, 2, 9); }, {-PolyPolyZ::one()}, 50);
}

TEST_CASE("strip_var_power and laurent_to_poly round trips") {
    RandomElements rnd(3, "round-trip");
    for (int t = 0; t < 100; ++t) {
        const PolyZ p = rnd.nonzero_poly_z(6, 9).shifted(static_cast<std::size_t>(rnd.uniform(0, 3)));
        const auto [m, q] = strip_var_power(p);
        CHECK(q.shifted(m) == p);
        CHECK_FALSE(is_zero(q.coeff(0)));

        const LaurentZ f = rnd.laurent(4, 9);
        const auto [n, poly] = laurent_to_poly(f);
        CHECK(n == static_cast<std::size_t>(std::max(0L, -f.low())) * (f.is_zero() ? 0 : 1));
        CHECK(f * LaurentZ::t_power(static_cast<long>(n)) == LaurentZ(poly));
    }
}

TEST_CASE("rational numbers and rational functions stay reduced") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == Integer(-3));
    CHECK(r.den() == Integer(2));
    CHECK(Rational(Integer(0), Integer(-5)).den() == Integer(1));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);

    const RationalFunction f(PolyZ{-1, 0, 1}, PolyZ{1, -1});  // (X^2-1)/(1-X)
    CHECK(f.num() == (PolyZ{-1, -1}));
    CHECK(f.den() == Zc(1));
    const RationalFunction g(PolyZ{2, 2}, PolyZ{0, 4});
    CHECK(g.num() == (PolyZ{1, 1}));
    CHECK(g.den() == (PolyZ{0, 2}));
    CHECK(RationalFunction(PolyZ(), PolyZ{3, 1}) == RationalFunction::zero());
}

TEST_CASE("content, primitive part and polynomial gcd") {
    CHECK(content(PolyZ{0, 4, 6}) == Integer(2));
    CHECK(content(PolyZ{1, 1}) == Integer(1));
    CHECK(content(Zc(-4)) == Integer(4));
    CHECK(primitive_part(PolyZ{0, 4, 6}) == (PolyZ{0, 2, 3}));
    CHECK(primitive_part(PolyZ{-1, 1}) == (PolyZ{-1, 1}));
    CHECK(primitive_part(PolyZ{0, -2}) == X());
    CHECK_THROWS_AS(content(PolyZ()), DomainError);

    CHECK(gcd(PolyZ{-1, 0, 1}, PolyZ{1, 2, 1}) == (PolyZ{1, 1}));
    CHECK(gcd(PolyZ{0, 6}, PolyZ{4}) == Zc(2));
    RandomElements rnd(5, "gcd");
    for (int t = 0; t < 50; ++t) {
        const PolyZ g = rnd.nonzero_poly_z(2, 5);
        const PolyZ a = g * rnd.nonzero_poly_z(2, 5);
        const PolyZ b = g * rnd.nonzero_poly_z(2, 5);
        const PolyZ h = gcd(a, b);
        CHECK(divides(h, a));
        CHECK(divides(h, b));
        CHECK(divides(canonical(g), h));
    }
}
