#include "doctest.h"

#include <algorithm>

#include "nagata/applications.hpp"
#include "nagata/localization.hpp"
#include "nagata/random.hpp"
#include "nagata/reference.hpp"

using namespace nagata;

namespace {

using SZ = GeneratedSubmonoid<Integer>;
using SP = GeneratedSubmonoid<PolyZ>;

const PolyZ X = PolyZ::variable();
PolyZ Zc(long c) { return PolyZ::constant(Integer(c)); }

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Integer random_prime(RandomElements& rnd, long bound) {
    while (true) {
        const Integer n(rnd.uniform(2, bound));
        if (is_prime(n)) return n;
    }
}

} // namespace

TEST_CASE("submonoid construction") {
    const SZ S(ints({2, -2, 3}));
    CHECK(S.rank() == 2);
    CHECK(S.prime_checked());
    CHECK(S.generators() == ints({2, 3}));
    CHECK_THROWS_AS(SZ(ints({4})), PreconditionError);
    CHECK_THROWS_AS(SZ(ints({1})), PreconditionError);
    CHECK_THROWS_AS(SZ(ints({0})), PreconditionError);
    CHECK_THROWS_AS(SP({PolyZ{0, 0, 1}}), PreconditionError);
    CHECK_THROWS_AS(S.member({1}), PreconditionError);
}

TEST_CASE("witness_multiset") {
    const SZ two(ints({2}));
    CHECK(witness_multiset(two.member({3}), two) == ints({2, 2, 2}));
    CHECK(two.member({3}).value == Integer(8));
    CHECK(witness_multiset(two.one(), two).empty());
    const SZ S(ints({2, 3}));
    const auto s = S.member({2, 1});
    CHECK(s.value == Integer(12));
    CHECK(witness_multiset(s, S) == ints({2, 2, 3}));
    CHECK(product(witness_multiset(s, S)) == s.value);
}

TEST_CASE("embed and fraction arithmetic") {
    const SZ S(ints({2}));
    const auto half = Fraction<Integer>{1, S.member({1})};
    const auto two_quarters = Fraction<Integer>{2, S.member({2})};
    CHECK(frac_eq(half, two_quarters));
    CHECK(frac_eq(embed(Integer(3), S), Fraction<Integer>{6, S.member({1})}));
    CHECK_FALSE(frac_eq(half, Fraction<Integer>{1, S.member({2})}));
    CHECK(embed(Integer(3), S).num == Integer(3));
    CHECK(embed(Integer(3), S).den.value == Integer(1));

    const auto three_quarters = Fraction<Integer>{3, S.member({2})};
    const auto prod = frac_mul(half, three_quarters, S);
    CHECK(prod.num == Integer(3));
    CHECK(prod.den.value == Integer(8));
    CHECK(prod.den.exponents == std::vector<unsigned>{3});
    const auto sum = frac_add(half, half, S);
    CHECK(sum.num == Integer(4));
    CHECK(sum.den.value == Integer(4));
    CHECK(frac_eq(sum, embed(Integer(1), S)));
    CHECK(frac_eq(frac_mul(half, embed(Integer(1), S), S), half));

    const SP SX({X});
    CHECK(frac_eq(frac_mul(embed(Zc(2), SX), embed(X, SX), SX), embed(Zc(2) * X, SX)));
    CHECK(frac_is_unit(embed(Integer(2), S), S));
    CHECK(frac_eq(frac_mul(embed(Integer(2), S), half, S), embed(Integer(1), S)));
}

TEST_CASE("frac_is_unit") {
    const SZ S(ints({2}));
    CHECK(frac_is_unit(Fraction<Integer>{4, S.member({1})}, S));
    CHECK_FALSE(frac_is_unit(Fraction<Integer>{3, S.member({1})}, S));
    CHECK_FALSE(frac_is_unit(embed(Integer(0), S), S));
}

TEST_CASE("find_associate_generator and avoids") {
    const SP SX({X});
    auto hit = find_associate_generator(X, SX);
    REQUIRE(hit);
    CHECK(hit->first == 0);
    CHECK(hit->second == Zc(1));
    const SZ two(ints({2}));
    auto neg = find_associate_generator(Integer(-2), two);
    REQUIRE(neg);
    CHECK(neg->first == 0);
    CHECK(neg->second == Integer(-1));
    CHECK_FALSE(find_associate_generator(Integer(3), two));
    CHECK(avoids(Integer(3), two));
    CHECK(brute_force_avoids(Integer(3), two));
    CHECK_FALSE(avoids(Integer(2), two));
    CHECK(avoids(PolyZ{1, 0, 1}, SX));
    CHECK_THROWS_AS(avoids(Integer(6), two), PreconditionError);
}

TEST_CASE("clear_denominator") {
    CHECK(clear_denominator(ints({2}), Integer(3), Integer(9), Integer(6)) == Integer(3));
    CHECK(clear_denominator(ints({}), Integer(3), Integer(6), Integer(2)) == Integer(2));
    CHECK(clear_denominator(ints({2, 2}), Integer(5), Integer(15), Integer(12)) == Integer(3));
    CHECK_THROWS_WITH(clear_denominator(ints({2}), Integer(3), Integer(9), Integer(5)), "not a valid instance");
    CHECK_THROWS_WITH(clear_denominator(ints({3}), Integer(3), Integer(3), Integer(3)), "avoidance violated");
    // 10 is not prime: it divides 5 * 2 but neither 5 nor 2.
    CHECK_THROWS_WITH(clear_denominator(ints({10}), Integer(5), Integer(1), Integer(2)), "primality oracle violated");
}

TEST_CASE("lift_dvd") {
    const SZ two(ints({2}));
    CHECK(lift_dvd(Integer(3), Integer(9), two, two.member({1}), Integer(6)) == Integer(3));
    CHECK(lift_dvd(Integer(3), Integer(3), two, two.one(), Integer(1)) == Integer(1));
    const SP SX({X});
    const PolyZ d = lift_dvd(PolyZ{1, 1}, PolyZ{-1, 0, 1}, SX, SX.member({1}), PolyZ{0, -1, 1});
    CHECK(d == PolyZ{-1, 1});
    CHECK_THROWS_WITH(lift_dvd(Integer(2), Integer(4), two, two.one(), Integer(2)), "avoidance violated");
}

TEST_CASE("split_prime_factors") {
    const auto a = split_prime_factors(Integer(7), ints({2, 3}), Integer(14), Integer(3));
    CHECK(a.left == Integer(7));
    CHECK(a.right == Integer(1));
    CHECK(a.left_primes == ints({2}));
    CHECK(a.right_primes == ints({3}));
    const auto b = split_prime_factors(Integer(5), ints({}), Integer(5), Integer(1));
    CHECK(b.left == Integer(5));
    CHECK(b.right == Integer(1));
    const auto c = split_prime_factors(PolyZ{1, 1}, std::vector<PolyZ>{X}, PolyZ{0, 1, 1}, Zc(1));
    CHECK(c.left == PolyZ{1, 1});
    CHECK(c.right == Zc(1));
    CHECK(c.left_primes == std::vector<PolyZ>{X});
    CHECK_THROWS_WITH(split_prime_factors(Integer(1), ints({6}), Integer(2), Integer(3)), "primality oracle violated");
}

TEST_CASE("transfer_irreducible") {
    const SP SX({X});
    const PolyZ p{1, 0, 1};
    const auto cert = transfer_irreducible(p, SX);
    CHECK(cert.non_unit());
    const auto r = cert.refute(embed(p, SX), embed(Zc(1), SX));
    CHECK(r.unit_side == Side::right);
    // X^2 + 1 == ((X^3 + X) / X) * (X / X).
    const auto r2 = cert.refute(Fraction<PolyZ>{PolyZ{0, 1, 0, 1}, SX.member({1})}, Fraction<PolyZ>{X, SX.member({1})});
    CHECK(r2.unit_side == Side::right);
    CHECK_THROWS_WITH(cert.refute(embed(X, SX), embed(X, SX)), "not a valid instance");

    const SZ two(ints({2}));
    CHECK(transfer_irreducible(Integer(3), two).non_unit());
    CHECK_FALSE(frac_is_unit(embed(Integer(3), two), two));
    CHECK_THROWS_WITH(transfer_irreducible(Integer(2), two), "avoidance violated");
}

TEST_CASE("transfer_prime_divides") {
    const IntegerOracle oracle(SZ(ints({2})));
    const auto& two = oracle.submonoid();
    const auto r = transfer_prime_divides(Integer(3), two, Integer(6), Integer(5), oracle);
    CHECK(r.side == Side::left);
    CHECK(r.quotient == Integer(2));
    const auto r2 = transfer_prime_divides(Integer(3), two, Integer(5), Integer(6), oracle);
    CHECK(r2.side == Side::right);
    CHECK(r2.quotient == Integer(2));
    CHECK_THROWS_AS(transfer_prime_divides(Integer(3), two, Integer(1), Integer(1), oracle), PreconditionError);

    const LaurentOracle laurent;
    const auto r3 = transfer_prime_divides(PolyZ{1, 1}, laurent.submonoid(), PolyZ{-1, 0, 1}, X, laurent);
    CHECK(r3.side == Side::left);
    CHECK(r3.quotient == PolyZ{-1, 1});
}

namespace {

// Accepts every prime and claims nothing divides anything.
struct RefusingOracle {
    bool is_prime_embedded(const Integer&) const { return true; }
    std::optional<DivisibilityWitness<Integer>> divides(const Fraction<Integer>&, const Fraction<Integer>&) const {
        return std::nullopt;
    }
};

} // namespace

TEST_CASE("transfer_prime_divides rejects a refusing oracle") {
    const SZ two(ints({2}));
    CHECK_THROWS_WITH(transfer_prime_divides(Integer(3), two, Integer(6), Integer(5), RefusingOracle{}),
                      "localization primality violated");
}

TEST_CASE("prime-or-unit chain") {
    const SZ two(ints({2}));
    CHECK(pou_lift_dvd(Integer(3), Integer(9), two, two.member({1}), Integer(6)) == Integer(3));
    const SP SX({X});
    CHECK(pou_transfer_irreducible(PolyZ{1, 0, 1}, SX).non_unit());
    const SZ six(ints({2, 3}));
    CHECK_THROWS_WITH(pou_lift_dvd(Integer(5), Integer(5), six, six.one(), Integer(1)),
                      doctest::Contains("prime-or-unit hypothesis fails"));
    CHECK_THROWS_AS(pou_transfer_irreducible(Integer(5), six), PreconditionError);
    const IntegerOracle oracle(six);
    CHECK_THROWS_AS(pou_transfer_prime_divides(Integer(5), six, Integer(10), Integer(1), oracle), PreconditionError);
    const IntegerOracle one_gen(two);
    const auto r = pou_transfer_prime_divides(Integer(3), two, Integer(6), Integer(5), one_gen);
    CHECK(r.side == Side::left);
    CHECK(r.quotient == Integer(2));
}

TEST_CASE("embed is an injective homomorphism") {
    RandomElements rnd(5, "loc-hom");
    const SP SX({X});
    const SZ S(ints({2, 3}));
    for (int t = 0; t < 100; ++t) {
        const Integer a = rnd.integer(1000), b = rnd.integer(1000);
        CHECK(frac_eq(embed(a + b, S), frac_add(embed(a, S), embed(b, S), S)));
        CHECK(frac_eq(embed(a * b, S), frac_mul(embed(a, S), embed(b, S), S)));
        CHECK(frac_eq(embed(a, S), embed(b, S)) == (a == b));
        const PolyZ p = rnd.poly_z(4, 9), q = rnd.poly_z(4, 9);
        CHECK(frac_eq(embed(p + q, SX), frac_add(embed(p, SX), embed(q, SX), SX)));
        CHECK(frac_eq(embed(p * q, SX), frac_mul(embed(p, SX), embed(q, SX), SX)));
        CHECK(frac_eq(embed(p, SX), embed(q, SX)) == (p == q));
    }
    for (const Integer& g : S.generators()) CHECK(frac_is_unit(embed(g, S), S));
}

TEST_CASE("members are never zero") {
    RandomElements rnd(6, "loc-zero");
    const SZ S(ints({2, 3, 5}));
    for (int t = 0; t < 100; ++t) {
        const std::vector<unsigned> e{unsigned(rnd.uniform(0, 5)), unsigned(rnd.uniform(0, 5)), unsigned(rnd.uniform(0, 5))};
        CHECK_FALSE(is_zero(S.member(e).value));
        CHECK(product(witness_multiset(S.member(e), S)) == S.member(e).value);
    }
}

TEST_CASE("avoids agrees with brute force over Z") {
    RandomElements rnd(7, "loc-avoid");
    const std::vector<SZ> subs{SZ(ints({2})), SZ(ints({2, 3})), SZ(ints({5, 7}))};
    for (int t = 0; t < 100; ++t) {
        Integer p = random_prime(rnd, 60);
        if (rnd.coin()) p = -p;
        for (const SZ& S : subs) CHECK(avoids(p, S) == brute_force_avoids(p, S, 8));
    }
}

TEST_CASE("constructed transfer instances verify") {
    RandomElements rnd(8, "loc-transfer");
    const SZ S(ints({2, 3}));
    for (int t = 0; t < 100; ++t) {
        Integer p = random_prime(rnd, 100);
        while (!avoids(p, S)) p = random_prime(rnd, 100);
        const auto s = S.member({unsigned(rnd.uniform(0, 3)), unsigned(rnd.uniform(0, 3))});
        const Integer d = rnd.nonzero_integer(50);
        const Integer a = p * d;
        const Integer c = *try_exact_div(s.value * a, p);
        CHECK(clear_denominator(witness_multiset(s, S), p, a, c) == d);
        CHECK(lift_dvd(p, a, S, s, c) == d);

        // p * s == a * b with the generator primes dealt randomly to a and b.
        Integer left = p, right = 1;
        for (const Integer& q : witness_multiset(s, S)) {
            Integer& side = rnd.coin() ? left : right;
            side = side * q;
        }
        const auto split = split_prime_factors(p, witness_multiset(s, S), left, right);
        CHECK(split.left * product(split.left_primes) == left);
        CHECK(split.right * product(split.right_primes) == right);
        CHECK(split.left * split.right == p);
        CHECK(split.left_primes.size() + split.right_primes.size() == witness_multiset(s, S).size());
    }
}

TEST_CASE("chains agree on single generators") {
    RandomElements rnd(9, "loc-chains");
    const LaurentOracle oracle;
    const SP& SX = oracle.submonoid();
    for (int t = 0; t < 60; ++t) {
        PolyZ p = rnd.nonzero_poly_z(3, 5);
        if (p.is_constant() || !is_irreducible(p) || !avoids(p, SX)) continue;
        const PolyZ d = rnd.nonzero_poly_z(2, 5);
        const auto s = SX.member({unsigned(rnd.uniform(0, 3))});
        const PolyZ a = p * d;
        const PolyZ c = *try_exact_div(s.value * a, p);
        CHECK(lift_dvd(p, a, SX, s, c) == pou_lift_dvd(p, a, SX, s, c));
        const PolyZ b = rnd.nonzero_poly_z(2, 5);
        const auto g1 = transfer_prime_divides(p, SX, a, b, oracle);
        const auto g2 = pou_transfer_prime_divides(p, SX, a, b, oracle);
        CHECK(g1.side == g2.side);
        CHECK(g1.quotient == g2.quotient);
        const Fraction<PolyZ> x{p * X, SX.member({2})}, y{X, SX.one()};
        const auto r1 = transfer_irreducible(p, SX).refute(x, y);
        const auto r2 = pou_transfer_irreducible(p, SX).refute(x, y);
        CHECK(r1.unit_side == r2.unit_side);
        CHECK(r1.split.left == r2.split.left);
        CHECK(r1.split.right == r2.split.right);
    }
}
