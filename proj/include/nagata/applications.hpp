#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nagata/descent.hpp"
#include "nagata/expr.hpp"
#include "nagata/factor.hpp"
#include "nagata/laurent.hpp"
#include "nagata/oracles.hpp"

namespace nagata {

/**
 * Factorization in Z[T, T^-1]: clear negative powers, strip T, factor the
 * rest in Z[X]. Every factor is prime in Z[X] and does not divide T; the
 * unit is +-T^k.
 */
PrimeFactorization<LaurentZ> factor_laurent(const LaurentZ& f);

/// Descent from the Laurent ring with S = powers of X. Both chains run and must agree.
DescentResult<PolyZ> factor_zx_via_laurent(const PolyZ& f);

/// Integer primes dividing lc(f); these generate S for the fraction-field route.
std::vector<Integer> fraction_field_generators(const PolyZ& f);

/// Descent from S^-1 Z[X] with Q[X] as the factorization engine.
DescentResult<PolyZ> factor_zx_via_fraction_field(const PolyZ& f);

/// Integer factorization through descent with S generated by its own primes.
DescentResult<Integer> factor_integer_certified(const Integer& n);

struct IteratedResult {
    PrimeFactorization<PolyPolyZ> base;
    DescentResult<PolyPolyZ> nagata;
};

/// Z[X]-primes dividing lc_Y(f).
std::vector<PolyZ> iterated_generators(const PolyPolyZ& f);

/**
 * Z[X][Y]: the bivariate base engine and descent from
 * S^-1 Z[X][Y] over Frac(Z[X])[Y], S generated by iterated_generators(f).
 * Throws LimitError ("desk-scale limit") past degree 4 in X or Y and
 * OracleViolation when the two results disagree.
 */
IteratedResult factor_iterated(const PolyPolyZ& f);

struct RouteTimings {
    double direct_ms = 0;
    double laurent_ms = 0;
    double fracfield_ms = 0;
};

struct CompareReport {
    PrimeFactorization<PolyZ> direct;
    DescentResult<PolyZ> laurent;
    DescentResult<PolyZ> fracfield;
    RouteTimings timings;
};

/// Runs the three Z[X] routes; any pairwise disagreement throws OracleViolation.
CompareReport compare_routes(const PolyZ& f);

enum class Route { direct, fraction_field, laurent, iterated, automatic };

std::string_view route_name(Route r);
/// "direct", "laurent", "fracfield", "auto".
Route parse_route(std::string_view name);

struct ReportFactor {
    std::string expr;
    std::size_t multiplicity = 1;
    std::string certificate_case;
    std::string certificate_detail;
    bool replayed = false;
};

struct FactorReport {
    std::string input;
    RingKind ring = RingKind::integers;
    Route route = Route::direct;
    std::string unit;
    std::vector<ReportFactor> factors;
    /// "input = unit*factors", valid input text on both sides.
    std::string rendering;
    double elapsed_ms = 0;
};

/// Parses and factors one expression along the requested route.
FactorReport factor_report(std::string_view input, Route route);

/// Factor string such as "2^2*3*(X + 1)"; "1" for the empty product.
template <Ring R>
std::string render_factorization(const PrimeFactorization<R>& f) {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    std::string prefix;
    if (f.unit == -R::one()) {
        prefix = "-";
    } else if (f.unit != R::one()) {
        append(to_string(f.unit));
    }
    for (const auto& [p, k] : f.multiplicities()) {
        std::string s = to_string(p);
        if (s.find(' ') != std::string::npos || (k > 1 && s.find('^') != std::string::npos)) s = "(" + s + ")";
        if (k > 1) s += "^" + std::to_string(k);
        append(s);
    }
    if (out.empty()) out = "1";
    return prefix + out;
}

} // namespace nagata
