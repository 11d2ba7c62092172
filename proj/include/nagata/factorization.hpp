#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nagata/errors.hpp"
#include "nagata/ring.hpp"

namespace nagata {

/**
 * A unit together with a multiset of irreducible factors. Engines always
 * emit the normalized form (canonical factors, sorted by canonical_compare),
 * which makes equality of factorizations structural. Hand-built values may
 * carry non-canonical factors; normalized() repairs them.
 */
template <Ring R>
struct PrimeFactorization {
    R unit = R::one();
    std::vector<R> factors;

    /// unit * product of factors.
    R value() const {
        R v = unit;
        for (const R& f : factors) v = v * f;
        return v;
    }

    PrimeFactorization normalized() const {
        PrimeFactorization out;
        out.unit = unit;
        out.factors.reserve(factors.size());
        for (const R& f : factors) {
            auto [u, n] = canonical_associate(f);
            out.unit = out.unit * u;
            out.factors.push_back(std::move(n));
        }
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const R& a, const R& b) { return canonical_compare(a, b) < 0; });
        return out;
    }

    /// Distinct canonical factors with their multiplicities, in sorted order.
    /// Assumes the factorization is normalized.
    std::vector<std::pair<R, std::size_t>> multiplicities() const {
        std::vector<std::pair<R, std::size_t>> out;
        for (const R& f : factors) {
            if (!out.empty() && out.back().first == f) {
                ++out.back().second;
            } else {
                out.emplace_back(f, 1);
            }
        }
        return out;
    }

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

template <Ring R>
PrimeFactorization<R> make_factorization(R unit, std::vector<R> factors) {
    return PrimeFactorization<R>{std::move(unit), std::move(factors)}.normalized();
}

/// Pairs (i, j): factor i of the first factorization is associate to
/// factor j of the second. Always a bijection.
struct AssociateBijection {
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
};

/**
 * Decides whether two factorizations into irreducibles describe the same
 * element with the same factors up to order and units. Every factor is
 * first run through `irreducible`; a failure throws PreconditionError
 * because the inputs are not factorizations at all.
 */
template <Ring R, class IrreduciblePred>
std::optional<AssociateBijection> check_factorization_unique(const PrimeFactorization<R>& f1,
                                                             const PrimeFactorization<R>& f2,
                                                             IrreduciblePred&& irreducible) {
    for (const auto* f : {&f1, &f2}) {
        if (!is_unit(f->unit)) throw PreconditionError("not a factorization into irreducibles: unit slot is not a unit");
        for (const R& p : f->factors) {
            if (!irreducible(p)) throw PreconditionError("not a factorization into irreducibles");
        }
    }
    if (f1.value() != f2.value()) return std::nullopt;
    if (f1.factors.size() != f2.factors.size()) return std::nullopt;

    std::vector<R> right;
    right.reserve(f2.factors.size());
    for (const R& p : f2.factors) right.push_back(canonical(p));
    std::vector<bool> used(right.size(), false);

    AssociateBijection out;
    for (std::size_t i = 0; i < f1.factors.size(); ++i) {
        const R left = canonical(f1.factors[i]);
        bool matched = false;
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (!used[j] && right[j] == left) {
                used[j] = true;
                out.pairing.emplace_back(i, j);
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return out;
}

template <Ring R>
std::optional<AssociateBijection> check_factorization_unique(const PrimeFactorization<R>& f1,
                                                             const PrimeFactorization<R>& f2) {
    return check_factorization_unique(f1, f2, [](const R& p) { return is_irreducible(p); });
}

} // namespace nagata
