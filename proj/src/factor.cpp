#include "nagata/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace nagata {

long kronecker_point(std::size_t index) {
    if (index == 0) return 0;
    const long k = static_cast<long>((index + 1) / 2);
    return (index % 2 == 1) ? k : -k;
}

PrimeFactorization<Integer> factor_integer(const Integer& n) {
    if (is_zero(n)) throw DomainError("cannot factor zero");
    PrimeFactorization<Integer> out;
    out.unit = Integer(n.sign());
    Integer m = abs(n);
    if (mpz_fits_ulong_p(m.mpz().get_mpz_t()) != 0) {
        unsigned long v = m.mpz().get_ui();
        for (unsigned long d = 2; d <= v / d; d += (d == 2 ? 1 : 2)) {
            while (v % d == 0) {
                out.factors.emplace_back(d);
                v /= d;
            }
        }
        if (v > 1) out.factors.emplace_back(v);
        return out;
    }
    constexpr unsigned long trial_bound = 1UL << 20;
    mpz_class rest = m.mpz();
    for (unsigned long d = 2; d < trial_bound && rest > 1; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            out.factors.emplace_back(d);
            rest /= d;
        }
    }
    if (rest > 1) {
        if (mpz_fits_ulong_p(rest.get_mpz_t()) == 0 && mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0) {
            throw LimitError("desk-scale limit: integer too large for trial division: " + n.to_string());
        }
        out.factors.emplace_back(Integer(rest));
    }
    return out;
}

namespace {

template <Ring D>
D from_long(long v) {
    if constexpr (std::same_as<D, Integer>) {
        return Integer(v);
    } else {
        return D::constant(Integer(v));
    }
}

// X-degree of an evaluated node value; only meaningful for D = Z[X].
template <Ring D>
std::size_t value_degree(const D& v) {
    if constexpr (std::same_as<D, Integer>) {
        return 0;
    } else {
        return v.is_zero() ? 0 : v.degree();
    }
}

template <Ring D>
std::size_t top_inner_degree(const Poly<D>& f) {
    if constexpr (std::same_as<D, Integer>) {
        return 0;
    } else {
        return inner_degree(f);
    }
}

/**
 * Depth-first search over divisor tuples (d_0, ..., d_e) of the node
 * values, in lexicographic order. Each level extends the Newton divided
 * difference table; an inexact division prunes the whole subtree since an
 * interpolant with coefficients in D has exact divided differences at
 * integer nodes.
 */
template <Ring D>
class DivisorSearch {
public:
    DivisorSearch(const Poly<D>& f, std::size_t e, std::vector<long> nodes, std::vector<D> values,
                  std::vector<std::pair<long, D>> checks)
        : f_(f), e_(e), nodes_(std::move(nodes)), checks_(std::move(checks)) {
        const std::size_t top = top_inner_degree(f);
        for (std::size_t j = 0; j <= e_; ++j) {
            generic_.push_back(value_degree(values[j]) == top);
            std::vector<D> divs = canonical_divisors(values[j]);
            std::vector<D> list;
            for (const D& d : divs) {
                list.push_back(d);
                if (j > 0) list.push_back(-d);
            }
            lists_.push_back(std::move(list));
        }
        table_.assign(e_ + 1, std::vector<D>(e_ + 1, D::zero()));
    }

    std::optional<Poly<D>> run() { return descend(0); }

private:
    std::optional<Poly<D>> descend(std::size_t j) {
        for (const D& d : lists_[j]) {
            if (j > 0 && generic_[0] && generic_[j] && value_degree(d) != value_degree(table_[0][0])) continue;
            if (!fill_row(j, d)) continue;
            if (j == e_) {
                if (auto g = accept()) return g;
            } else if (auto g = descend(j + 1)) {
                return g;
            }
        }
        return std::nullopt;
    }

    bool fill_row(std::size_t j, const D& d) {
        table_[j][0] = d;
        for (std::size_t k = 1; k <= j; ++k) {
            const D diff = table_[j][k - 1] - table_[j - 1][k - 1];
            auto q = try_exact_div(diff, from_long<D>(nodes_[j] - nodes_[j - k]));
            if (!q) return false;
            table_[j][k] = std::move(*q);
        }
        return true;
    }

    std::optional<Poly<D>> accept() const {
        if (is_zero(table_[e_][e_])) return std::nullopt;
        Poly<D> g = Poly<D>::constant(table_[e_][e_]);
        for (std::size_t k = e_; k-- > 0;) {
            g = g * Poly<D>{from_long<D>(-nodes_[k]), D::one()} + Poly<D>::constant(table_[k][k]);
        }
        if (!divides(g.leading(), f_.leading())) return std::nullopt;
        for (const auto& [b, w] : checks_) {
            const D gb = g.eval(from_long<D>(b));
            if (is_zero(gb) || !divides(gb, w)) return std::nullopt;
        }
        if (!divides(g, f_)) return std::nullopt;
        return g;
    }

    const Poly<D>& f_;
    std::size_t e_;
    std::vector<long> nodes_;
    std::vector<std::pair<long, D>> checks_;
    std::vector<std::vector<D>> lists_;
    std::vector<bool> generic_;
    std::vector<std::vector<D>> table_;
};

/// Splits a primitive polynomial into canonical irreducible factors; the
/// leftover unit (+-1) is multiplied into `unit`.
template <Ring D>
std::vector<Poly<D>> kronecker_split(Poly<D> work, Poly<D>& unit) {
    std::vector<Poly<D>> factors;
    std::size_t e_start = 1;
    while (!work.is_constant()) {
        const std::size_t n = work.degree();
        if (n == 1) break;

        const std::size_t needed = n / 2 + 3;
        std::vector<long> points;
        std::vector<D> values;
        bool split = false;
        for (std::size_t i = 0; i < needed; ++i) {
            const long a = kronecker_point(i);
            D v = work.eval(from_long<D>(a));
            if (is_zero(v)) {
                const Poly<D> lin{from_long<D>(-a), D::one()};
                work = *try_exact_div(work, lin);
                factors.push_back(lin);
                split = true;
                break;
            }
            points.push_back(a);
            values.push_back(std::move(v));
        }
        if (split) continue;

        bool found = false;
        for (std::size_t e = e_start; e <= n / 2 && !found; ++e) {
            std::vector<long> nodes(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(e + 1));
            std::vector<D> vals(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(e + 1));
            std::vector<std::pair<long, D>> checks;
            for (std::size_t i = e + 1; i < points.size(); ++i) checks.emplace_back(points[i], values[i]);
            DivisorSearch<D> search(work, e, std::move(nodes), std::move(vals), std::move(checks));
            if (auto g = search.run()) {
                const Poly<D> normal = canonical(*g);
                work = *try_exact_div(work, normal);
                factors.push_back(normal);
                e_start = e;
                found = true;
            }
        }
        if (!found) break;
    }
    if (!work.is_constant()) {
        auto [u, normal] = canonical_associate(work);
        factors.push_back(std::move(normal));
        work = u;
    }
    unit = unit * work;
    return factors;
}

void check_univariate_limits(const PolyZ& p) {
    if (p.degree() > EngineLimits::max_univariate_degree) {
        throw LimitError("desk-scale limit: degree " + std::to_string(p.degree()) + " exceeds " +
                         std::to_string(EngineLimits::max_univariate_degree));
    }
    for (const Integer& c : p.coefficients()) {
        if (abs(c) > Integer(EngineLimits::max_coefficient)) {
            throw LimitError("desk-scale limit: coefficient " + c.to_string() + " exceeds 10^6");
        }
    }
}

void check_bivariate_limits(const PolyPolyZ& p) {
    if (p.degree() > EngineLimits::max_bivariate_degree || inner_degree(p) > EngineLimits::max_bivariate_degree) {
        throw LimitError("desk-scale limit: bivariate degrees must be at most 4 in X and in Y");
    }
}

template <Ring R>
std::vector<R> divisors_from(const PrimeFactorization<R>& f) {
    std::vector<R> divs{R::one()};
    for (const auto& [p, mult] : f.multiplicities()) {
        const std::size_t base = divs.size();
        R pk = R::one();
        for (std::size_t k = 1; k <= mult; ++k) {
            pk = pk * p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(canonical(divs[i] * pk));
        }
    }
    std::sort(divs.begin(), divs.end(), [](const R& a, const R& b) { return canonical_compare(a, b) < 0; });
    return divs;
}

} // namespace

std::vector<Integer> canonical_divisors(const Integer& v) {
    return divisors_from(factor_integer(v));
}

std::vector<PolyZ> canonical_divisors(const PolyZ& v) {
    return divisors_from(factor_poly_ZX(v));
}

PrimeFactorization<PolyZ> kronecker_factor(const PolyZ& p) {
    if (p.is_zero()) throw DomainError("cannot factor zero");
    if (content(p) != Integer(1)) throw DomainError("kronecker_factor requires a primitive polynomial");
    check_univariate_limits(p);
    PolyZ unit = PolyZ::one();
    auto factors = kronecker_split(p, unit);
    return make_factorization(unit, std::move(factors));
}

PrimeFactorization<PolyZ> factor_poly_ZX(const PolyZ& p) {
    if (p.is_zero()) throw DomainError("cannot factor zero");
    const Integer c = content(p);
    const auto ci = factor_integer(c);
    std::vector<PolyZ> factors;
    for (const Integer& q : ci.factors) factors.push_back(PolyZ::constant(q));
    PolyZ unit = canonical_associate(p).unit;
    const PolyZ prim = primitive_part(p);
    if (!prim.is_constant()) {
        const auto kf = kronecker_factor(prim);
        unit = unit * kf.unit;
        factors.insert(factors.end(), kf.factors.begin(), kf.factors.end());
    }
    return make_factorization(unit, std::move(factors));
}

PrimeFactorization<PolyQ> factor_poly_QX(const PolyQ& p) {
    if (p.is_zero()) throw DomainError("cannot factor zero");
    PolyQ unit = PolyQ::constant(p.leading());
    if (p.is_constant()) return {unit, {}};
    Integer den(1);
    for (const Rational& c : p.coefficients()) den = lcm(den, c.den());
    const PolyZ cleared = map_coefficients<Integer>(p, [&](const Rational& c) { return c.num() * quotient(den, c.den()); });
    const auto kf = kronecker_factor(primitive_part(cleared));
    std::vector<PolyQ> factors;
    for (const PolyZ& g : kf.factors) factors.push_back(canonical(to_rational(g)));
    return make_factorization(unit, std::move(factors));
}

PrimeFactorization<PolyPolyZ> factor_bivariate(const PolyPolyZ& p) {
    if (p.is_zero()) throw DomainError("cannot factor zero");
    check_bivariate_limits(p);
    const PolyZ c = content(p);
    std::vector<PolyPolyZ> factors;
    PolyPolyZ unit = canonical_associate(p).unit;
    for (const PolyZ& q : factor_poly_ZX(c).factors) factors.push_back(PolyPolyZ::constant(q));
    const PolyPolyZ prim = primitive_part(p);
    if (!prim.is_constant()) {
        auto split = kronecker_split(prim, unit);
        factors.insert(factors.end(), split.begin(), split.end());
    }
    return make_factorization(unit, std::move(factors));
}

PrimeFactorization<PolyRatFun> factor_poly_FracZX(const PolyRatFun& p) {
    if (p.is_zero()) throw DomainError("cannot factor zero");
    PolyRatFun unit = PolyRatFun::constant(p.leading());
    if (p.is_constant()) return {unit, {}};
    PolyZ den = PolyZ::one();
    for (const RationalFunction& c : p.coefficients()) {
        den = canonical(*try_exact_div(den * c.den(), gcd(den, c.den())));
    }
    const PolyPolyZ cleared = map_coefficients<PolyZ>(
        p, [&](const RationalFunction& c) { return c.num() * *try_exact_div(den, c.den()); });
    const auto fb = factor_bivariate(primitive_part(cleared));
    std::vector<PolyRatFun> factors;
    for (const PolyPolyZ& g : fb.factors) {
        const PolyRatFun lifted = map_coefficients<RationalFunction>(g, [](const PolyZ& c) { return RationalFunction(c); });
        factors.push_back(canonical(lifted));
    }
    return make_factorization(unit, std::move(factors));
}

bool is_irreducible(const Integer& a) {
    return !is_zero(a) && !is_unit(a) && factor_integer(a).factors.size() == 1;
}

bool is_irreducible(const PolyZ& a) {
    return !a.is_zero() && !is_unit(a) && factor_poly_ZX(a).factors.size() == 1;
}

bool is_irreducible(const PolyQ& a) {
    return !a.is_zero() && !is_unit(a) && factor_poly_QX(a).factors.size() == 1;
}

bool is_irreducible(const PolyPolyZ& a) {
    return !a.is_zero() && !is_unit(a) && factor_bivariate(a).factors.size() == 1;
}

} // namespace nagata
