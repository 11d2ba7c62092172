#include "nagata/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nagata/applications.hpp"
#include "nagata/gauss.hpp"
#include "nagata/random.hpp"
#include "nagata/reference.hpp"

namespace nagata {

namespace {

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}

    void check(bool ok, const std::string& invariant) {
        if (ok) return;
        if (r_.failures++ == 0) r_.first_failure = invariant;
    }

private:
    SuiteResult& r_;
};

using Suite = std::function<void(RandomElements&, const SelftestOptions&, Recorder&)>;

Integer random_prime(RandomElements& rnd, long bound) {
    while (true) {
        const Integer n(rnd.uniform(2, bound));
        if (is_prime(n)) return n;
    }
}

PolyPolyZ random_bivariate(RandomElements& rnd) {
    PolyPolyZ a, b;
    do a = rnd.poly_poly(2, 2, 4); while (a.is_zero());
    do b = rnd.poly_poly(2, 2, 4); while (b.is_zero());
    return a * b;
}

template <class R>
void ring_axioms(const R& a, const R& b, const R& c, Recorder& rec, const std::string& ring) {
    rec.check((a + b) + c == a + (b + c), ring + ": addition is associative");
    rec.check(a + b == b + a, ring + ": addition is commutative");
    rec.check((a * b) * c == a * (b * c), ring + ": multiplication is associative");
    rec.check(a * b == b * a, ring + ": multiplication is commutative");
    rec.check(a * (b + c) == a * b + a * c, ring + ": distributivity");
    rec.check(a + R::zero() == a && a * R::one() == a && a - a == R::zero(), ring + ": identities");
    if (!is_zero(a) && !is_zero(b)) rec.check(!is_zero(a * b), ring + ": domain law");
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = {
        {"exact-rings.ring-axioms",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             ring_axioms(rnd.integer(1000), rnd.integer(1000), rnd.integer(1000), rec, "Z");
             ring_axioms(rnd.poly_z(4, 9), rnd.poly_z(4, 9), rnd.poly_z(4, 9), rec, "Z[X]");
             ring_axioms(rnd.poly_q(3, 9), rnd.poly_q(3, 9), rnd.poly_q(3, 9), rec, "Q[X]");
             ring_axioms(rnd.laurent(3, 9), rnd.laurent(3, 9), rnd.laurent(3, 9), rec, "Z[T,T^-1]");
             ring_axioms(rnd.poly_poly(2, 2, 9), rnd.poly_poly(2, 2, 9), rnd.poly_poly(2, 2, 9), rec, "Z[X][Y]");
             ring_axioms(rnd.rational_function(2, 9), rnd.rational_function(2, 9), rnd.rational_function(2, 9), rec,
                         "Frac(Z[X])");
         }},
        {"exact-rings.exact-division",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const PolyZ b = rnd.nonzero_poly_z(3, 9);
             const PolyZ q = rnd.poly_z(3, 9);
             const auto got = try_exact_div(b * q, b);
             rec.check(got && *got == q, "try_exact_div completeness: b*q / b == q");
             const PolyZ a = rnd.poly_z(4, 9);
             if (auto r = try_exact_div(a, b)) rec.check(b * *r == a, "try_exact_div soundness: b * q == a");
             const LaurentZ l = rnd.laurent(3, 9);
             const auto [n, p] = laurent_to_poly(l);
             rec.check(l * LaurentZ::t_power(static_cast<long>(n)) == LaurentZ(p), "laurent_to_poly round trip");
             const PolyZ s = canonical(a);
             rec.check(canonical(s) == s, "canonical_associate idempotence");
         }},
        {"base-factorizers.reconstruction",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const Integer n = rnd.nonzero_integer(1'000'000);
             rec.check(factor_integer(n).value() == n, "factor_integer reconstruction");
             const PolyZ p = rnd.nonzero_poly_z(4, 9);
             const auto f = factor_poly_ZX(p);
             rec.check(f.value() == p, "factor_poly_ZX reconstruction");
             for (const PolyZ& q : f.factors) {
                 rec.check(factor_poly_ZX(q).factors.size() == 1, "factor_poly_ZX output is irreducible");
             }
             const PolyQ pq = rnd.poly_q(3, 9);
             if (!pq.is_zero()) rec.check(factor_poly_QX(pq).value() == pq, "factor_poly_QX reconstruction");
         }},
        {"base-factorizers.uniqueness",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const PolyZ p = rnd.nonzero_poly_z(4, 9);
             const auto f = factor_poly_ZX(p);
             auto g = f;
             std::shuffle(g.factors.begin(), g.factors.end(), rnd.engine());
             for (PolyZ& q : g.factors) {
                 if (rnd.coin()) {
                     q = -q;
                     g.unit = -g.unit;
                 }
             }
             rec.check(check_factorization_unique(f, g).has_value(), "factorization uniqueness up to units and order");
         }},
        {"base-factorizers.gauss-content",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const PolyZ a = rnd.nonzero_poly_z(4, 9), b = rnd.nonzero_poly_z(4, 9);
             rec.check(content(a * b) == content(a) * content(b), "content is multiplicative");
             if (!a.is_constant()) {
                 const auto q = factor_poly_QX(to_rational(a));
                 std::vector<PolyQ> expect;
                 for (const PolyZ& g : factor_poly_ZX(a).factors) {
                     if (!g.is_constant()) expect.push_back(canonical(to_rational(g)));
                 }
                 std::sort(expect.begin(), expect.end(),
                           [](const PolyQ& x, const PolyQ& y) { return canonical_compare(x, y) < 0; });
                 rec.check(q.factors == expect, "Q[X] factors are the primitive Z[X] factors made monic");
             }
         }},
        {"localization.embed-homomorphism",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const GeneratedSubmonoid<PolyZ> S({PolyZ::variable(), PolyZ::constant(Integer(2))});
             const PolyZ a = rnd.poly_z(3, 9), b = rnd.poly_z(3, 9);
             rec.check(frac_eq(embed(a + b, S), frac_add(embed(a, S), embed(b, S), S)), "embed preserves addition");
             rec.check(frac_eq(embed(a * b, S), frac_mul(embed(a, S), embed(b, S), S)), "embed preserves multiplication");
             rec.check(frac_eq(embed(a, S), embed(b, S)) == (a == b), "embed is injective");
             for (const PolyZ& g : S.generators()) rec.check(frac_is_unit(embed(g, S), S), "generators become units");
             const std::vector<unsigned> e{unsigned(rnd.uniform(0, 4)), unsigned(rnd.uniform(0, 4))};
             rec.check(!is_zero(S.member(e).value), "submonoid members are nonzero");
         }},
        {"localization.avoids-brute-force",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const Integer p = rnd.coin() ? random_prime(rnd, 60) : -random_prime(rnd, 60);
             for (const auto& gens : {std::vector<Integer>{2}, std::vector<Integer>{2, 3}, std::vector<Integer>{5, 7}}) {
                 const GeneratedSubmonoid<Integer> S(gens);
                 rec.check(avoids(p, S) == brute_force_avoids(p, S, 8), "avoids agrees with brute force");
             }
         }},
        {"localization.clear-denominator",
         [](RandomElements& rnd, const SelftestOptions& opt, Recorder& rec) {
             const GeneratedSubmonoid<Integer> S({Integer(2), Integer(3)});
             Integer p = random_prime(rnd, 100);
             while (!avoids(p, S)) p = random_prime(rnd, 100);
             const auto s = S.member({unsigned(rnd.uniform(0, 3)), unsigned(rnd.uniform(0, 3))});
             const Integer a = p * rnd.nonzero_integer(50);
             const Integer c = *try_exact_div(s.value * a, p);
             const Integer d = opt.clear_integer(witness_multiset(s, S), p, a, c);
             rec.check(a == p * d, "clear_denominator soundness: a == p * d");
             const Integer d2 = lift_dvd(p, a, S, s, c, opt.clear_integer);
             rec.check(a == p * d2, "lift_dvd soundness: a == p * d");

             const GeneratedSubmonoid<PolyZ> SX({PolyZ::variable()});
             PolyZ q = rnd.nonzero_poly_z(2, 5);
             if (!q.is_constant() && is_irreducible(q) && avoids(q, SX)) {
                 const auto t = SX.member({unsigned(rnd.uniform(0, 3))});
                 const PolyZ x = q * rnd.nonzero_poly_z(2, 5);
                 const PolyZ y = *try_exact_div(t.value * x, q);
                 const PolyZ z = opt.clear_polynomial(witness_multiset(t, SX), q, x, y);
                 rec.check(x == q * z, "clear_denominator soundness over Z[X]: a == p * d");
             }
         }},
        {"localization.split-conservation",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const GeneratedSubmonoid<Integer> S({Integer(2), Integer(3), Integer(5)});
             const Integer p = random_prime(rnd, 100);
             const auto s = S.member({unsigned(rnd.uniform(0, 3)), unsigned(rnd.uniform(0, 2)), unsigned(rnd.uniform(0, 2))});
             const auto f = witness_multiset(s, S);
             Integer a = rnd.coin() ? p : Integer(1);
             Integer b = a == p ? Integer(1) : p;
             for (const Integer& q : f) {
                 Integer& side = rnd.coin() ? a : b;
                 side = side * q;
             }
             const auto sp = split_prime_factors(p, f, a, b);
             rec.check(sp.left * product(sp.left_primes) == a, "split conservation: a == a' * prod(fa)");
             rec.check(sp.right * product(sp.right_primes) == b, "split conservation: b == b' * prod(fb)");
             rec.check(sp.left * sp.right == p, "split conservation: a' * b' == p");
             rec.check(sp.left_primes.size() + sp.right_primes.size() == f.size(), "split conservation: fa + fb == f");
         }},
        {"localization.chain-agreement",
         [](RandomElements& rnd, const SelftestOptions& opt, Recorder& rec) {
             const IntegerOracle oracle(GeneratedSubmonoid<Integer>({random_prime(rnd, 30)}));
             const auto& S = oracle.submonoid();
             Integer p = random_prime(rnd, 60);
             while (!avoids(p, S)) p = random_prime(rnd, 60);
             const auto s = S.member({unsigned(rnd.uniform(0, 4))});
             const Integer a = p * rnd.nonzero_integer(40);
             const Integer c = *try_exact_div(s.value * a, p);
             rec.check(lift_dvd(p, a, S, s, c, opt.clear_integer) == pou_lift_dvd(p, a, S, s, c),
                       "chain agreement: lift_dvd");
             const Integer b = rnd.nonzero_integer(40);
             const auto g = transfer_prime_divides(p, S, a, b, oracle);
             const auto h = pou_transfer_prime_divides(p, S, a, b, oracle);
             rec.check(g.side == h.side && g.quotient == h.quotient, "chain agreement: transfer_prime_divides");
             const GeneratedSubmonoid<Integer> two({Integer(2), Integer(3)});
             bool rejected = false;
             try {
                 pou_transfer_irreducible(Integer(5), two);
             } catch (const PreconditionError&) {
                 rejected = true;
             }
             rec.check(rejected, "prime-or-unit chain rejects two generators");
         }},
        {"nagata-descent.reconstruction",
         [](RandomElements& rnd, const SelftestOptions& opt, Recorder& rec) {
             const PolyZ f = rnd.nonzero_poly_z(4, 9);
             const RationalOracle oracle(fraction_field_generators(f));
             const auto r = descend_factor(f, oracle.submonoid(), oracle, opt.clear_polynomial);
             rec.check(r.factorization.value() == f, "descent reconstruction");
             rec.check(check_factorization_unique(r.factorization, factor_poly_ZX(f)).has_value(),
                       "descent agrees with factor_poly_ZX");
             for (const auto& c : r.certificates) {
                 rec.check(c.replay(oracle.submonoid(), oracle), "certificate replay");
             }
         }},
        {"nagata-descent.chain-agreement",
         [](RandomElements& rnd, const SelftestOptions& opt, Recorder& rec) {
             const PolyZ f = rnd.nonzero_poly_z(4, 9);
             const LaurentOracle oracle;
             const auto a = descend_factor(f, oracle.submonoid(), oracle, opt.clear_polynomial);
             const auto b = descend_factor_pou(f, oracle.submonoid(), oracle);
             rec.check(check_factorization_unique(a.factorization, b.factorization).has_value(),
                       "descend_factor and descend_factor_pou agree");
         }},
        {"nagata-descent.key-lemma-dichotomy",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const PolyZ f = rnd.nonzero_poly_z(4, 9);
             const RationalOracle oracle({Integer(2), Integer(3)});
             for (const PolyZ& p : factor_poly_ZX(f).factors) {
                 const bool case1 = find_associate_generator(p, oracle.submonoid()).has_value();
                 rec.check(case1 != avoids(p, oracle.submonoid()), "exactly one key-lemma case applies");
                 const auto c = is_prime_nagata(p, oracle.submonoid(), oracle);
                 rec.check((c.kind == CertificateCase::generator) == case1, "certificate case matches the dichotomy");
                 rec.check(c.replay(oracle.submonoid(), oracle), "certificate replay");
             }
         }},
        {"applications.route-agreement",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const PolyZ f = rnd.nonzero_poly_z(4, 9);
             const auto r = compare_routes(f);
             rec.check(r.direct.value() == f && r.laurent.factorization.value() == f &&
                           r.fracfield.factorization.value() == f,
                       "every route reconstructs its input");
         }},
        {"applications.laurent-unit-law",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             LaurentZ f;
             do f = rnd.laurent(3, 9); while (f.is_zero());
             const auto fac = factor_laurent(f);
             rec.check(is_unit(fac.unit), "Laurent unit is +-T^k");
             rec.check(fac.value() == f, "Laurent reconstruction");
             for (const LaurentZ& r : fac.factors) {
                 rec.check(!divides(r.body(), PolyZ::variable()), "Laurent factors do not divide T");
             }
         }},
        {"applications.parser-roundtrip",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             // The ring is read off the variables present, so each sample must use its own.
             PolyZ p;
             do p = rnd.poly_z(4, 20); while (p.size() < 2);
             LaurentZ l;
             do l = rnd.laurent(3, 20); while (l.is_zero() || (l.low() == 0 && l.body().is_constant()));
             PolyPolyZ b;
             do b = rnd.poly_poly(3, 3, 20); while (b.size() < 2);
             const Element es[] = {rnd.integer(1000), p, l, b};
             for (const Element& e : es) {
                 rec.check(parse_expr(to_string(e)) == e, "parse(print(e)) == e for " + to_string(e));
             }
             const PolyZ f = rnd.nonzero_poly_z(4, 9);
             const Element back = parse_expr(render_factorization(factor_poly_ZX(f)));
             rec.check(back == Element(f) || (f.is_constant() && back == Element(f.coeff(0))),
                       "rendered factorization parses back to the input");
         }},
        {"applications.iterated-consistency",
         [](RandomElements& rnd, const SelftestOptions&, Recorder& rec) {
             const PolyPolyZ f = random_bivariate(rnd);
             const auto r = factor_iterated(f);
             rec.check(r.base.value() == f && r.nagata.factorization.value() == f, "iterated reconstruction");
             rec.check(check_factorization_unique(r.base, r.nagata.factorization).has_value(),
                       "base engine and descent agree on Z[X][Y]");
         }},
    };
    return table;
}

} // namespace

std::vector<std::string> selftest_suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, suite] : suites()) out.push_back(name);
    return out;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
    std::vector<SuiteResult> out;
    for (const auto& [name, suite] : suites()) {
        SuiteResult r{name, options.trials, 0, {}};
        Recorder rec(r);
        RandomElements rnd(options.seed, name);
        for (std::size_t t = 0; t < options.trials; ++t) {
            try {
                suite(rnd, options, rec);
            } catch (const Error& e) {
                rec.check(false, std::string("exception: ") + e.what());
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace nagata
