#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nagata/descent.hpp"
#include "nagata/factor.hpp"
#include "nagata/laurent.hpp"

namespace nagata {

/// embed(p) is prime exactly when the oracle's factorization of it has one prime.
template <Ring R>
bool has_single_prime(const LocalizationOracle<R>& oracle, const R& p) {
    if (is_zero(p)) return false;
    return oracle.factor_fraction(embed(p, oracle.submonoid())).primes.size() == 1;
}

/// S^-1 Z for a finite set of integer primes, backed by trial division.
class IntegerOracle final : public LocalizationOracle<Integer> {
public:
    explicit IntegerOracle(GeneratedSubmonoid<Integer> S) : S_(std::move(S)) {}

    const GeneratedSubmonoid<Integer>& submonoid() const override { return S_; }
    LocalizedFactorization<Integer> factor_fraction(const Fraction<Integer>& x) const override;
    std::optional<DivisibilityWitness<Integer>> divides(const Fraction<Integer>& x,
                                                        const Fraction<Integer>& y) const override;
    bool is_prime_embedded(const Integer& p) const override { return has_single_prime(*this, p); }
    std::string name() const override { return "S^-1 Z"; }

private:
    GeneratedSubmonoid<Integer> S_;
};

/// Z[X, X^-1] as the localization of Z[X] at the powers of X.
class LaurentOracle final : public LocalizationOracle<PolyZ> {
public:
    LaurentOracle();

    const GeneratedSubmonoid<PolyZ>& submonoid() const override { return S_; }
    LocalizedFactorization<PolyZ> factor_fraction(const Fraction<PolyZ>& x) const override;
    std::optional<DivisibilityWitness<PolyZ>> divides(const Fraction<PolyZ>& x, const Fraction<PolyZ>& y) const override;
    bool is_prime_embedded(const PolyZ& p) const override { return has_single_prime(*this, p); }
    std::string name() const override { return "Z[X,X^-1]"; }

    LaurentZ to_laurent(const Fraction<PolyZ>& x) const;

private:
    GeneratedSubmonoid<PolyZ> S_;
};

/**
 * S^-1 D[Y] for a set S of primes of D (D = Z or Z[X]), embedded as
 * constants. Factorization goes through the field Frac(D)[Y]; primitive
 * field factors are primes of S^-1 D[Y], and the leftover constant is
 * split into primes of D, those in S becoming units.
 */
template <class D>
class FractionFieldOracle final : public LocalizationOracle<Poly<D>> {
public:
    using R = Poly<D>;

    /// generators: primes of D.
    explicit FractionFieldOracle(const std::vector<D>& generators);

    const GeneratedSubmonoid<R>& submonoid() const override { return S_; }
    LocalizedFactorization<R> factor_fraction(const Fraction<R>& x) const override;
    std::optional<DivisibilityWitness<R>> divides(const Fraction<R>& x, const Fraction<R>& y) const override;
    bool is_prime_embedded(const R& p) const override { return has_single_prime(*this, p); }
    std::string name() const override;

private:
    GeneratedSubmonoid<R> S_;
};

extern template class FractionFieldOracle<Integer>;
extern template class FractionFieldOracle<PolyZ>;

using RationalOracle = FractionFieldOracle<Integer>;
using RationalFunctionOracle = FractionFieldOracle<PolyZ>;

} // namespace nagata
