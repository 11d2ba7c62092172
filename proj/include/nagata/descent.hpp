#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nagata/errors.hpp"
#include "nagata/factorization.hpp"
#include "nagata/localization.hpp"

namespace nagata {

/// Factorization in S^-1 R: embed(x) ~ unit * prod(primes).
template <Ring R>
struct LocalizedFactorization {
    Fraction<R> unit;
    std::vector<Fraction<R>> primes;
};

/**
 * Factorization oracle for S^-1 R. Implementations are stateless; every
 * prime fraction has its numerator in R.
 */
template <Ring R>
class LocalizationOracle {
public:
    virtual ~LocalizationOracle() = default;

    virtual const GeneratedSubmonoid<R>& submonoid() const = 0;
    /// x must be nonzero.
    virtual LocalizedFactorization<R> factor_fraction(const Fraction<R>& x) const = 0;
    /// (s, c) with y == x * c / s, when x divides y in S^-1 R.
    virtual std::optional<DivisibilityWitness<R>> divides(const Fraction<R>& x, const Fraction<R>& y) const = 0;
    virtual bool is_prime_embedded(const R& p) const = 0;
    /// Short label for the localized ring, e.g. "Q[X]".
    virtual std::string name() const = 0;
};

enum class CertificateCase { generator, localization };

inline const char* case_name(CertificateCase c) {
    return c == CertificateCase::generator ? "generator" : "localization";
}

enum class Chain { prime_generated, prime_or_unit };

/// Why p is prime in R: associate to a generator, or avoids S and is prime in S^-1 R.
template <Ring R>
struct PrimalityCertificate {
    R subject;
    CertificateCase kind = CertificateCase::generator;
    std::size_t generator_index = 0;
    R unit = R::one();
    bool avoids = false;
    std::string attestation;

    bool replay(const GeneratedSubmonoid<R>& S, const LocalizationOracle<R>& oracle) const {
        if (!is_irreducible(subject)) return false;
        if (kind == CertificateCase::generator) {
            return generator_index < S.rank() && is_unit(unit) && subject == unit * S.generators()[generator_index];
        }
        return avoids && nagata::avoids(subject, S) && !frac_is_unit(embed(subject, S), S) &&
               oracle.is_prime_embedded(subject) && attestation == oracle.name();
    }
};

/**
 * Key lemma: an irreducible p is prime in R when it is associate to a
 * generator (Case 1) or when it avoids S and embed(p) is prime (Case 2).
 */
template <Ring R>
PrimalityCertificate<R> is_prime_nagata(const R& p, const GeneratedSubmonoid<R>& S, const LocalizationOracle<R>& oracle,
                                        Chain chain = Chain::prime_generated) {
    if (is_zero(p) || is_unit(p) || !is_irreducible(p)) throw DomainError("not irreducible");
    PrimalityCertificate<R> cert;
    cert.subject = p;
    if (auto hit = find_associate_generator(p, S)) {
        cert.kind = CertificateCase::generator;
        cert.generator_index = hit->first;
        cert.unit = hit->second;
        return cert;
    }
    if (chain == Chain::prime_generated) {
        transfer_irreducible(p, S);
    } else {
        pou_transfer_irreducible(p, S);
    }
    if (!oracle.is_prime_embedded(p)) throw DomainError("localization not UFD on this input");
    cert.kind = CertificateCase::localization;
    cert.avoids = true;
    cert.attestation = oracle.name();
    return cert;
}

/// Strips generator primes from the numerator: x.num == r * prod(stripped).
template <Ring R>
std::pair<R, std::vector<R>> normalize_numerator(const Fraction<R>& x, const GeneratedSubmonoid<R>& S) {
    auto [r, s] = S.strip(x.num);
    return {r, witness_multiset(s, S)};
}

template <Ring R>
struct DescentResult {
    PrimeFactorization<R> factorization;
    /// One per entry of factorization.factors, same order.
    std::vector<PrimalityCertificate<R>> certificates;
};

inline constexpr std::size_t descent_peel_cap = 64;

namespace detail {

template <Ring R>
DescentResult<R> descend(const R& a, const GeneratedSubmonoid<R>& S, const LocalizationOracle<R>& oracle, Chain chain,
                         const ClearDenominatorFn<R>& clear) {
    if (is_zero(a)) throw DomainError("cannot factor zero");
    if (chain == Chain::prime_or_unit) require_prime_or_unit(S);

    // Step 1: generator primes.
    auto [a0, stripped] = S.strip(a);
    std::vector<R> factors = witness_multiset(stripped, S);
    R unit = a0;

    // Steps 2-4: factor the residual in S^-1 R and pull the factors back.
    if (!is_unit(a0)) {
        const Fraction<R> x = embed(a0, S);
        const LocalizedFactorization<R> loc = oracle.factor_fraction(x);
        Fraction<R> prod = loc.unit;
        for (const Fraction<R>& q : loc.primes) prod = frac_mul(prod, q, S);
        if (!frac_eq(prod, x)) throw OracleViolation("oracle factorization does not multiply back");
        if (!frac_is_unit(loc.unit, S)) throw OracleViolation("oracle unit is not a unit");

        // a0 * D == W * r_1 * ... * r_k with D in S and W = unit numerator times stripped S-parts.
        const SMember<R>& D = prod.den;
        R W = loc.unit.num;
        std::vector<R> rs;
        for (const Fraction<R>& q : loc.primes) {
            auto [r, sigma] = normalize_numerator(q, S);
            if (is_unit(r)) throw OracleViolation("oracle returned a unit as a prime factor");
            W = W * product(sigma);
            rs.push_back(std::move(r));
        }

        R cur = a0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            R c = W;
            for (std::size_t j = i + 1; j < rs.size(); ++j) c = c * rs[j];
            if (chain == Chain::prime_generated) {
                if (!avoids(rs[i], S)) throw OracleViolation("descent inconsistency: factor does not avoid S");
                cur = clear(witness_multiset(D, S), rs[i], cur, c);
            } else {
                cur = pou_lift_dvd(rs[i], cur, S, D, c);
            }
        }
        // Now D * cur == W; peel D out of W and the rest must be a unit.
        const std::vector<R> peel = witness_multiset(D, S);
        if (peel.size() > descent_peel_cap) throw OracleViolation("descent inconsistency: peel cap exceeded");
        R rest = W;
        for (const R& g : peel) {
            auto q = try_exact_div(rest, g);
            if (!q) throw OracleViolation("descent inconsistency");
            rest = std::move(*q);
        }
        if (rest != cur || !is_unit(rest)) throw OracleViolation("descent inconsistency");
        unit = rest;
        factors.insert(factors.end(), rs.begin(), rs.end());
    }

    // Step 5: assemble, certify, verify.
    DescentResult<R> out;
    out.factorization = make_factorization(unit, std::move(factors));
    if (out.factorization.value() != a) throw OracleViolation("descent reconstruction failed");
    for (const R& f : out.factorization.factors) out.certificates.push_back(is_prime_nagata(f, S, oracle, chain));
    return out;
}

} // namespace detail

template <Ring R>
DescentResult<R> descend_factor(const R& a, const GeneratedSubmonoid<R>& S, const LocalizationOracle<R>& oracle,
                                const ClearDenominatorFn<R>& clear = default_clear_denominator<R>()) {
    return detail::descend(a, S, oracle, Chain::prime_generated, clear);
}

template <Ring R>
DescentResult<R> descend_factor_pou(const R& a, const GeneratedSubmonoid<R>& S, const LocalizationOracle<R>& oracle) {
    return detail::descend(a, S, oracle, Chain::prime_or_unit, default_clear_denominator<R>());
}

} // namespace nagata
