#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagata/errors.hpp"
#include "nagata/ring.hpp"

namespace nagata {

/// Value together with its exponent vector over the generators of S.
template <Ring R>
struct SMember {
    R value = R::one();
    std::vector<unsigned> exponents;

    friend bool operator==(const SMember&, const SMember&) = default;
};

/**
 * Submonoid of R generated by finitely many primes. Membership is carried
 * by exponent vectors, never decided from the value alone. Generators are
 * checked with the ADL `is_prime` oracle of R and deduplicated up to
 * associates (first occurrence wins).
 */
template <Ring R>
class GeneratedSubmonoid {
public:
    GeneratedSubmonoid() = default;

    explicit GeneratedSubmonoid(const std::vector<R>& generators) {
        for (const R& g : generators) {
            if (is_zero(g) || is_unit(g)) throw PreconditionError("generator must be nonzero and not a unit");
            if (!is_prime(g)) throw PreconditionError("generator is not prime");
            bool duplicate = false;
            for (const R& h : generators_) duplicate = duplicate || associated(g, h);
            if (!duplicate) generators_.push_back(g);
        }
        prime_checked_ = true;
    }

    const std::vector<R>& generators() const noexcept { return generators_; }
    std::size_t rank() const noexcept { return generators_.size(); }
    bool prime_checked() const noexcept { return prime_checked_; }

    SMember<R> one() const { return SMember<R>{R::one(), std::vector<unsigned>(rank(), 0)}; }

    SMember<R> member(const std::vector<unsigned>& exponents) const {
        if (exponents.size() != rank()) throw PreconditionError("exponent vector does not match the generators");
        R v = R::one();
        for (std::size_t i = 0; i < rank(); ++i) v = v * power(generators_[i], exponents[i]);
        if (is_zero(v)) throw OracleViolation("submonoid member is zero");
        return SMember<R>{v, exponents};
    }

    SMember<R> generator_power(std::size_t i, unsigned k) const {
        std::vector<unsigned> e(rank(), 0);
        e.at(i) = k;
        return member(e);
    }

    SMember<R> multiply(const SMember<R>& s, const SMember<R>& t) const {
        std::vector<unsigned> e(rank(), 0);
        for (std::size_t i = 0; i < rank(); ++i) e[i] = s.exponents.at(i) + t.exponents.at(i);
        return SMember<R>{s.value * t.value, e};
    }

    /// Divides every generator out of a as often as possible: a = residual * stripped.value.
    std::pair<R, SMember<R>> strip(const R& a) const {
        if (is_zero(a)) throw DomainError("cannot strip generators from zero");
        R r = a;
        std::vector<unsigned> e(rank(), 0);
        for (std::size_t i = 0; i < rank(); ++i) {
            while (auto q = try_exact_div(r, generators_[i])) {
                r = std::move(*q);
                ++e[i];
            }
        }
        return {r, member(e)};
    }

    /// a = unit * member when a is an S-element up to a unit of R.
    std::optional<std::pair<R, SMember<R>>> decompose(const R& a) const {
        if (is_zero(a)) return std::nullopt;
        auto [r, s] = strip(a);
        if (!is_unit(r)) return std::nullopt;
        return std::make_pair(r, s);
    }

private:
    std::vector<R> generators_;
    bool prime_checked_ = true;
};

/// a / s in S^-1 R. Not reduced; compare with frac_eq.
template <Ring R>
struct Fraction {
    R num;
    SMember<R> den;
};

template <Ring R>
std::vector<R> witness_multiset(const SMember<R>& s, const GeneratedSubmonoid<R>& S) {
    std::vector<R> out;
    for (std::size_t i = 0; i < S.rank(); ++i) {
        for (unsigned k = 0; k < s.exponents.at(i); ++k) out.push_back(S.generators()[i]);
    }
    return out;
}

template <Ring R>
R product(const std::vector<R>& xs) {
    R v = R::one();
    for (const R& x : xs) v = v * x;
    return v;
}

template <Ring R>
Fraction<R> embed(const R& a, const GeneratedSubmonoid<R>& S) {
    return Fraction<R>{a, S.one()};
}

template <Ring R>
bool frac_eq(const Fraction<R>& x, const Fraction<R>& y) {
    return x.num * y.den.value == y.num * x.den.value;
}

template <Ring R>
Fraction<R> frac_mul(const Fraction<R>& x, const Fraction<R>& y, const GeneratedSubmonoid<R>& S) {
    return Fraction<R>{x.num * y.num, S.multiply(x.den, y.den)};
}

template <Ring R>
Fraction<R> frac_add(const Fraction<R>& x, const Fraction<R>& y, const GeneratedSubmonoid<R>& S) {
    return Fraction<R>{x.num * y.den.value + y.num * x.den.value, S.multiply(x.den, y.den)};
}

template <Ring R>
bool frac_is_unit(const Fraction<R>& x, const GeneratedSubmonoid<R>& S) {
    if (is_zero(x.num)) return false;
    return is_unit(S.strip(x.num).first);
}

namespace detail {

template <Ring R>
void require_irreducible(const R& p) {
    if (!is_irreducible(p)) throw PreconditionError("not irreducible");
}

} // namespace detail

/// (i, u) with p == u * generator_i.
template <Ring R>
std::optional<std::pair<std::size_t, R>> find_associate_generator(const R& p, const GeneratedSubmonoid<R>& S) {
    detail::require_irreducible(p);
    for (std::size_t i = 0; i < S.rank(); ++i) {
        auto u = try_exact_div(p, S.generators()[i]);
        if (u && is_unit(*u)) return std::make_pair(i, *u);
    }
    return std::nullopt;
}

/// p divides no element of S. Decided by the associate scan: an irreducible
/// dividing a product of primes is associate to one of them.
template <Ring R>
bool avoids(const R& p, const GeneratedSubmonoid<R>& S) {
    return !find_associate_generator(p, S).has_value();
}

/**
 * Given (prod f) * a == p * c with every q in f prime and q not dividing p,
 * returns d with a == p * d. Each q divides p * c but not p, so it divides c.
 */
template <Ring R>
R clear_denominator(const std::vector<R>& f, const R& p, const R& a, const R& c) {
    if (product(f) * a != p * c) throw PreconditionError("not a valid instance");
    R rest = c;
    for (const R& q : f) {
        if (divides(q, p)) throw PreconditionError("avoidance violated");
        auto next = try_exact_div(rest, q);
        if (!next) throw OracleViolation("primality oracle violated");
        rest = std::move(*next);
    }
    if (a != p * rest) throw OracleViolation("primality oracle violated");
    return rest;
}

template <Ring R>
using ClearDenominatorFn = std::function<R(const std::vector<R>&, const R&, const R&, const R&)>;

template <Ring R>
ClearDenominatorFn<R> default_clear_denominator() {
    return [](const std::vector<R>& f, const R& p, const R& a, const R& c) { return clear_denominator(f, p, a, c); };
}

/// From s * a == p * c (embed(p) divides embed(a)) to a == p * d in R.
template <Ring R>
R lift_dvd(const R& p, const R& a, const GeneratedSubmonoid<R>& S, const SMember<R>& s, const R& c,
           const ClearDenominatorFn<R>& clear = default_clear_denominator<R>()) {
    if (!avoids(p, S)) throw PreconditionError("avoidance violated");
    return clear(witness_multiset(s, S), p, a, c);
}

template <Ring R>
struct PrimeSplit {
    R left;
    R right;
    std::vector<R> left_primes;
    std::vector<R> right_primes;
};

/// Partitions f when p * (prod f) == a * b: a == left * prod(left_primes),
/// b == right * prod(right_primes), p == left * right.
template <Ring R>
PrimeSplit<R> split_prime_factors(const R& p, const std::vector<R>& f, const R& a, const R& b) {
    if (p * product(f) != a * b) throw PreconditionError("not a valid instance");
    PrimeSplit<R> out{a, b, {}, {}};
    for (const R& q : f) {
        if (auto x = try_exact_div(out.left, q)) {
            out.left = std::move(*x);
            out.left_primes.push_back(q);
        } else if (auto y = try_exact_div(out.right, q)) {
            out.right = std::move(*y);
            out.right_primes.push_back(q);
        } else {
            throw OracleViolation("primality oracle violated");
        }
    }
    if (out.left * out.right != p) throw OracleViolation("primality oracle violated");
    return out;
}

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// Outcome of running the refuter on one factor pair.
template <Ring R>
struct Refutation {
    Side unit_side;
    PrimeSplit<R> split;
};

/**
 * Certificate that embed(p) is irreducible in S^-1 R: embed(p) is not a
 * unit, and every concrete factorization embed(p) == x * y submitted to
 * refute() has a unit side.
 */
template <Ring R>
class IrreducibilityCertificate {
public:
    IrreducibilityCertificate(R subject, GeneratedSubmonoid<R> S, bool prime_or_unit)
        : subject_(std::move(subject)), S_(std::move(S)), prime_or_unit_(prime_or_unit) {}

    const R& subject() const noexcept { return subject_; }
    bool non_unit() const { return !frac_is_unit(embed(subject_, S_), S_); }

    /// Requires embed(p) == x * y, i.e. p * s * t == a * b.
    Refutation<R> refute(const Fraction<R>& x, const Fraction<R>& y) const {
        if (subject_ * x.den.value * y.den.value != x.num * y.num) throw PreconditionError("not a valid instance");
        PrimeSplit<R> split = prime_or_unit_ ? split_single_generator(x, y) : split_prime_factors(
            subject_, concat(witness_multiset(x.den, S_), witness_multiset(y.den, S_)), x.num, y.num);
        Side side;
        if (is_unit(split.left)) {
            side = Side::left;
        } else if (is_unit(split.right)) {
            side = Side::right;
        } else {
            throw OracleViolation("irreducibility oracle violated");
        }
        const Fraction<R>& unit_part = side == Side::left ? x : y;
        if (!frac_is_unit(unit_part, S_)) throw OracleViolation("refuter reported a non-unit side");
        return Refutation<R>{side, std::move(split)};
    }

private:
    static std::vector<R> concat(std::vector<R> a, const std::vector<R>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    // p * g^n == a * b: each copy of the prime g goes to whichever side it divides.
    PrimeSplit<R> split_single_generator(const Fraction<R>& x, const Fraction<R>& y) const {
        PrimeSplit<R> out{x.num, y.num, {}, {}};
        if (S_.rank() == 0) return out;
        const R& g = S_.generators()[0];
        const unsigned n = x.den.exponents.at(0) + y.den.exponents.at(0);
        for (unsigned k = 0; k < n; ++k) {
            if (auto l = try_exact_div(out.left, g)) {
                out.left = std::move(*l);
                out.left_primes.push_back(g);
            } else if (auto r = try_exact_div(out.right, g)) {
                out.right = std::move(*r);
                out.right_primes.push_back(g);
            } else {
                throw OracleViolation("primality oracle violated");
            }
        }
        return out;
    }

    R subject_;
    GeneratedSubmonoid<R> S_;
    bool prime_or_unit_;
};

template <Ring R>
IrreducibilityCertificate<R> transfer_irreducible(const R& p, const GeneratedSubmonoid<R>& S) {
    if (!avoids(p, S)) throw PreconditionError("avoidance violated");
    IrreducibilityCertificate<R> cert(p, S, false);
    if (!cert.non_unit()) throw OracleViolation("embedded irreducible is a unit");
    return cert;
}

/// y == x * c / s.
template <Ring R>
struct DivisibilityWitness {
    SMember<R> s;
    R c;
};

template <Ring R>
struct SideQuotient {
    Side side;
    R quotient;
};

namespace detail {

template <Ring R, class Oracle, class Lift>
SideQuotient<R> transfer_prime_divides_with(const R& p, const GeneratedSubmonoid<R>& S, const R& a, const R& b,
                                            const Oracle& oracle, Lift lift) {
    if (!divides(p, a * b)) throw PreconditionError("p does not divide a * b");
    if (!avoids(p, S)) throw PreconditionError("avoidance violated");
    if (!oracle.is_prime_embedded(p)) throw OracleViolation("localization primality violated");
    const Fraction<R> fp = embed(p, S);
    if (auto w = oracle.divides(fp, embed(a, S))) return SideQuotient<R>{Side::left, lift(a, *w)};
    if (auto w = oracle.divides(fp, embed(b, S))) return SideQuotient<R>{Side::right, lift(b, *w)};
    throw OracleViolation("localization primality violated");
}

template <Ring R>
void require_prime_or_unit(const GeneratedSubmonoid<R>& S) {
    if (S.rank() >= 2) {
        throw PreconditionError(
            "prime-or-unit hypothesis fails: a product of two generator primes is neither prime nor a unit");
    }
}

} // namespace detail

/// Decides p | a or p | b from the localization side and pulls the witness back.
template <Ring R, class Oracle>
SideQuotient<R> transfer_prime_divides(const R& p, const GeneratedSubmonoid<R>& S, const R& a, const R& b,
                                       const Oracle& oracle) {
    return detail::transfer_prime_divides_with(p, S, a, b, oracle, [&](const R& x, const DivisibilityWitness<R>& w) {
        return lift_dvd(p, x, S, w.s, w.c);
    });
}

// Prime-or-unit chain. Every element of S must be prime or a unit, which
// for a generated submonoid means at most one generator; each factor g of
// the denominator is then handled by the "s is prime" case in turn.

template <Ring R>
R pou_lift_dvd(const R& p, const R& a, const GeneratedSubmonoid<R>& S, const SMember<R>& s, const R& c) {
    detail::require_prime_or_unit(S);
    if (!avoids(p, S)) throw PreconditionError("avoidance violated");
    if (s.value * a != p * c) throw PreconditionError("not a valid instance");
    R rest = c;
    if (S.rank() == 1) {
        const R& g = S.generators()[0];
        if (divides(g, p)) throw PreconditionError("avoidance violated");
        for (unsigned k = 0; k < s.exponents.at(0); ++k) {
            auto next = try_exact_div(rest, g);
            if (!next) throw OracleViolation("primality oracle violated");
            rest = std::move(*next);
        }
    }
    if (a != p * rest) throw OracleViolation("primality oracle violated");
    return rest;
}

template <Ring R>
IrreducibilityCertificate<R> pou_transfer_irreducible(const R& p, const GeneratedSubmonoid<R>& S) {
    detail::require_prime_or_unit(S);
    if (!avoids(p, S)) throw PreconditionError("avoidance violated");
    IrreducibilityCertificate<R> cert(p, S, true);
    if (!cert.non_unit()) throw OracleViolation("embedded irreducible is a unit");
    return cert;
}

template <Ring R, class Oracle>
SideQuotient<R> pou_transfer_prime_divides(const R& p, const GeneratedSubmonoid<R>& S, const R& a, const R& b,
                                           const Oracle& oracle) {
    detail::require_prime_or_unit(S);
    return detail::transfer_prime_divides_with(p, S, a, b, oracle, [&](const R& x, const DivisibilityWitness<R>& w) {
        return pou_lift_dvd(p, x, S, w.s, w.c);
    });
}

} // namespace nagata
