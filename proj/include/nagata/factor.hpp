#pragma once

#include <cstddef>
#include <vector>

#include "nagata/factorization.hpp"
#include "nagata/gauss.hpp"
#include "nagata/integer.hpp"
#include "nagata/poly.hpp"
#include "nagata/rational_function.hpp"

namespace nagata {

/// Bounds of the desk-scale exact engines.
struct EngineLimits {
    static constexpr std::size_t max_univariate_degree = 16;
    static constexpr long max_coefficient = 1'000'000;
    static constexpr std::size_t max_bivariate_degree = 4;  // in each of X and Y
};

/// Trial division. Unit is +-1, factors are the primes in increasing
/// order. Throws DomainError("cannot factor zero") for n == 0.
PrimeFactorization<Integer> factor_integer(const Integer& n);

/**
 * Kronecker's method for a primitive polynomial: evaluate at 0, 1, -1, 2,
 * -2, ..., enumerate divisor tuples of the values in lexicographic order,
 * interpolate, and split off the first candidate that divides exactly.
 * Candidates are tried by increasing degree, so every split factor is
 * irreducible. Throws DomainError for zero or non-primitive input and
 * LimitError beyond EngineLimits.
 */
PrimeFactorization<PolyZ> kronecker_factor(const PolyZ& p);

/// Content primes as constant factors plus Kronecker on the primitive part.
PrimeFactorization<PolyZ> factor_poly_ZX(const PolyZ& p);

/// Monic irreducible factors; the unit is the leading coefficient.
PrimeFactorization<PolyQ> factor_poly_QX(const PolyQ& p);

/**
 * Base engine for Z[X][Y]: the content in Z[X] is factored by
 * factor_poly_ZX (each prime becomes a constant factor) and the primitive
 * part by Kronecker's method in Y over Z[X]. Throws LimitError
 * ("desk-scale limit") when either degree exceeds 4.
 */
PrimeFactorization<PolyPolyZ> factor_bivariate(const PolyPolyZ& p);

/// Monic irreducible factors over Frac(Z[X]); clears denominators and
/// reduces to factor_bivariate.
PrimeFactorization<PolyRatFun> factor_poly_FracZX(const PolyRatFun& p);

// Irreducible and prime coincide in these UFDs; both are decided by a full
// factorization (nonzero, non-unit, exactly one factor).
bool is_irreducible(const Integer& a);
bool is_irreducible(const PolyZ& a);
bool is_irreducible(const PolyQ& a);
bool is_irreducible(const PolyPolyZ& a);
inline bool is_prime(const Integer& a) { return is_irreducible(a); }
inline bool is_prime(const PolyZ& a) { return is_irreducible(a); }
inline bool is_prime(const PolyQ& a) { return is_irreducible(a); }
inline bool is_prime(const PolyPolyZ& a) { return is_irreducible(a); }

/// All canonical divisors of a nonzero element (positive integers in
/// increasing order; canonical polynomial divisors in canonical order).
std::vector<Integer> canonical_divisors(const Integer& v);
std::vector<PolyZ> canonical_divisors(const PolyZ& v);

/// Evaluation point sequence 0, 1, -1, 2, -2, ...
long kronecker_point(std::size_t index);

} // namespace nagata
