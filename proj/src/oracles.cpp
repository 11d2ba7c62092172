#include "nagata/oracles.hpp"

#include "nagata/applications.hpp"
#include "nagata/gauss.hpp"

namespace nagata {

namespace {

template <Ring R>
std::optional<DivisibilityWitness<R>> checked(const GeneratedSubmonoid<R>& S, const Fraction<R>& x,
                                              const Fraction<R>& y, R c, SMember<R> s) {
    const Fraction<R> rebuilt{x.num * c, S.multiply(x.den, s)};
    if (!frac_eq(rebuilt, y)) throw OracleViolation("divisibility witness does not verify");
    return DivisibilityWitness<R>{std::move(s), std::move(c)};
}

template <class D>
struct FieldOf;

template <>
struct FieldOf<Integer> {
    using FieldPoly = PolyQ;
    static PolyQ lift(const PolyZ& p) { return to_rational(p); }
    static PrimeFactorization<PolyQ> factor(const PolyQ& p) { return factor_poly_QX(p); }
    static PrimeFactorization<Integer> factor_base(const Integer& n) { return factor_integer(n); }
    static Integer num(const Rational& r) { return r.num(); }
    static Integer den(const Rational& r) { return r.den(); }
    static Integer lcm(const Integer& a, const Integer& b) { return nagata::lcm(a, b); }
    static const char* name() { return "S^-1 Z[X] (Q[X] engine)"; }
};

template <>
struct FieldOf<PolyZ> {
    using FieldPoly = PolyRatFun;
    static PolyRatFun lift(const PolyPolyZ& p) {
        return map_coefficients<RationalFunction>(p, [](const PolyZ& c) { return RationalFunction(c); });
    }
    static PrimeFactorization<PolyRatFun> factor(const PolyRatFun& p) { return factor_poly_FracZX(p); }
    static PrimeFactorization<PolyZ> factor_base(const PolyZ& n) { return factor_poly_ZX(n); }
    static PolyZ num(const RationalFunction& r) { return r.num(); }
    static PolyZ den(const RationalFunction& r) { return r.den(); }
    static PolyZ lcm(const PolyZ& a, const PolyZ& b) { return canonical(*try_exact_div(a * b, gcd(a, b))); }
    static const char* name() { return "S^-1 Z[X][Y] (Frac(Z[X])[Y] engine)"; }
};

/// q == C / m with m the least common denominator of the coefficients.
template <class D>
std::pair<Poly<D>, D> clear_denominators(const typename FieldOf<D>::FieldPoly& q) {
    using F = FieldOf<D>;
    D m = D::one();
    for (const auto& c : q.coefficients()) m = F::lcm(m, F::den(c));
    std::vector<D> out;
    out.reserve(q.size());
    for (const auto& c : q.coefficients()) out.push_back(F::num(c) * *try_exact_div(m, F::den(c)));
    return {Poly<D>(std::move(out)), m};
}

} // namespace

LocalizedFactorization<Integer> IntegerOracle::factor_fraction(const Fraction<Integer>& x) const {
    const auto f = factor_integer(x.num);
    LocalizedFactorization<Integer> out{Fraction<Integer>{f.unit, x.den}, {}};
    for (const Integer& p : f.factors) {
        if (S_.decompose(p)) {
            out.unit.num = out.unit.num * p;
        } else {
            out.primes.push_back(embed(p, S_));
        }
    }
    return out;
}

std::optional<DivisibilityWitness<Integer>> IntegerOracle::divides(const Fraction<Integer>& x,
                                                                   const Fraction<Integer>& y) const {
    if (is_zero(x.num)) {
        if (!is_zero(y.num)) return std::nullopt;
        return checked(S_, x, y, Integer(0), S_.one());
    }
    const Rational q(y.num * x.den.value, x.num * y.den.value);
    auto dec = S_.decompose(q.den());
    if (!dec) return std::nullopt;
    return checked(S_, x, y, q.num() * unit_inverse(dec->first), dec->second);
}

LaurentOracle::LaurentOracle() : S_(std::vector<PolyZ>{PolyZ::variable()}) {}

LaurentZ LaurentOracle::to_laurent(const Fraction<PolyZ>& x) const {
    return LaurentZ(-static_cast<long>(x.den.exponents.at(0)), x.num);
}

LocalizedFactorization<PolyZ> LaurentOracle::factor_fraction(const Fraction<PolyZ>& x) const {
    const auto f = factor_laurent(to_laurent(x));
    const PolyZ sign = f.unit.body();
    const long k = f.unit.low();
    LocalizedFactorization<PolyZ> out;
    if (k >= 0) {
        out.unit = Fraction<PolyZ>{sign.shifted(static_cast<std::size_t>(k)), S_.one()};
    } else {
        out.unit = Fraction<PolyZ>{sign, S_.generator_power(0, static_cast<unsigned>(-k))};
    }
    for (const LaurentZ& r : f.factors) out.primes.push_back(embed(r.body(), S_));
    return out;
}

std::optional<DivisibilityWitness<PolyZ>> LaurentOracle::divides(const Fraction<PolyZ>& x,
                                                                 const Fraction<PolyZ>& y) const {
    if (is_zero(x.num)) {
        if (!is_zero(y.num)) return std::nullopt;
        return checked(S_, x, y, PolyZ(), S_.one());
    }
    auto q = try_exact_div(to_laurent(y), to_laurent(x));
    if (!q) return std::nullopt;
    if (q->low() >= 0) return checked(S_, x, y, q->body().shifted(static_cast<std::size_t>(q->low())), S_.one());
    return checked(S_, x, y, q->body(), S_.generator_power(0, static_cast<unsigned>(-q->low())));
}

template <class D>
FractionFieldOracle<D>::FractionFieldOracle(const std::vector<D>& generators) {
    std::vector<R> gens;
    gens.reserve(generators.size());
    for (const D& g : generators) gens.push_back(R::constant(g));
    S_ = GeneratedSubmonoid<R>(gens);
}

template <class D>
LocalizedFactorization<Poly<D>> FractionFieldOracle<D>::factor_fraction(const Fraction<R>& x) const {
    using F = FieldOf<D>;
    if (is_zero(x.num)) throw DomainError("cannot factor zero");
    const auto field = F::factor(F::lift(x.num));

    std::vector<R> prims;
    R prod = R::one();
    for (const auto& m : field.factors) {
        prims.push_back(primitive_part(clear_denominators<D>(m).first));
        prod = prod * prims.back();
    }
    auto k = try_exact_div(x.num, prod);
    if (!k || !k->is_constant()) throw OracleViolation("field factors do not divide the numerator");

    LocalizedFactorization<R> out;
    const auto base = F::factor_base(k->coeff(0));
    R unit_num = R::constant(base.unit);
    for (const D& p : base.factors) {
        const R c = R::constant(p);
        if (S_.decompose(c)) {
            unit_num = unit_num * c;
        } else {
            out.primes.push_back(embed(c, S_));
        }
    }
    for (const R& g : prims) {
        const R lc = R::constant(g.leading());
        if (auto dec = S_.decompose(lc)) {
            out.primes.push_back(Fraction<R>{g * unit_inverse(dec->first), dec->second});
            unit_num = unit_num * lc;
        } else {
            out.primes.push_back(embed(g, S_));
        }
    }
    out.unit = Fraction<R>{unit_num, x.den};
    return out;
}

template <class D>
std::optional<DivisibilityWitness<Poly<D>>> FractionFieldOracle<D>::divides(const Fraction<R>& x,
                                                                            const Fraction<R>& y) const {
    using F = FieldOf<D>;
    if (is_zero(x.num)) {
        if (!is_zero(y.num)) return std::nullopt;
        return checked(S_, x, y, R(), S_.one());
    }
    auto q = try_exact_div(F::lift(y.num * x.den.value), F::lift(x.num * y.den.value));
    if (!q) return std::nullopt;
    auto [c, m] = clear_denominators<D>(*q);
    auto dec = S_.decompose(R::constant(m));
    if (!dec) return std::nullopt;
    return checked(S_, x, y, c * unit_inverse(dec->first), dec->second);
}

template <class D>
std::string FractionFieldOracle<D>::name() const {
    return FieldOf<D>::name();
}

template class FractionFieldOracle<Integer>;
template class FractionFieldOracle<PolyZ>;

} // namespace nagata
