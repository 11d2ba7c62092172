#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "nagata/integer.hpp"
#include "nagata/laurent.hpp"
#include "nagata/poly.hpp"
#include "nagata/rational_function.hpp"

namespace nagata {

/// Seeded generator of random ring elements for property suites.
/// Deterministic for a given seed (mt19937_64 + libstdc++ distributions).
class RandomElements {
public:
    explicit RandomElements(std::uint64_t seed) : rng_(seed) {}
    /// Independent stream derived from a seed and a suite name.
    RandomElements(std::uint64_t seed, std::string_view stream);

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Integer integer(long bound) { return Integer(uniform(-bound, bound)); }
    Integer nonzero_integer(long bound);

    /// Degree at most max_degree, coefficients in [-bound, bound]; may be zero.
    PolyZ poly_z(std::size_t max_degree, long bound);
    PolyZ nonzero_poly_z(std::size_t max_degree, long bound);
    PolyQ poly_q(std::size_t max_degree, long bound);
    LaurentZ laurent(long max_span, long bound);
    PolyPolyZ poly_poly(std::size_t deg_y, std::size_t deg_x, long bound);
    RationalFunction rational_function(std::size_t max_degree, long bound);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace nagata
