#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nagata/integer.hpp"
#include "nagata/localization.hpp"
#include "nagata/poly.hpp"

namespace nagata {

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct SelftestOptions {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    /// Replaceable so a test can check that a broken implementation is caught.
    ClearDenominatorFn<Integer> clear_integer = default_clear_denominator<Integer>();
    ClearDenominatorFn<PolyZ> clear_polynomial = default_clear_denominator<PolyZ>();
};

std::vector<std::string> selftest_suite_names();

/// Every property suite, in name order. Deterministic for a given seed:
/// each suite draws from its own stream derived from the seed and its name.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

} // namespace nagata
