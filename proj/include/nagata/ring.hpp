#pragma once

#include <compare>
#include <concepts>
#include <optional>

namespace nagata {

/// Unit/normal split of an element: unit * normal == element, and
/// associated elements share the same normal.
template <class R>
struct Associate {
    R unit;
    R normal;
};

/**
 * The operations every concrete ring in the library provides.
 *
 * Arithmetic is exact. `try_exact_div(a, b)` returns the unique q with
 * b * q == a when it exists (throws DomainError for b == 0), and never
 * approximates. `canonical_associate` picks one representative per class
 * of associates, which is what makes "equal up to units" a plain equality
 * test. `canonical_compare` is a total structural order used only to sort
 * factor multisets deterministically.
 *
 * Every instance shipped here is an integral domain.
 */
template <class R>
concept Ring = std::regular<R> && requires(const R& a, const R& b) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { is_zero(a) } -> std::same_as<bool>;
    { is_unit(a) } -> std::same_as<bool>;
    { try_exact_div(a, b) } -> std::same_as<std::optional<R>>;
    { canonical_associate(a) } -> std::same_as<Associate<R>>;
    { canonical_compare(a, b) } -> std::same_as<std::strong_ordering>;
};

/// b divides a.
template <Ring R>
bool divides(const R& b, const R& a) {
    return try_exact_div(a, b).has_value();
}

template <Ring R>
R canonical(const R& a) {
    return canonical_associate(a).normal;
}

template <Ring R>
bool associated(const R& a, const R& b) {
    return canonical(a) == canonical(b);
}

template <Ring R>
R power(R base, unsigned exponent) {
    R result = R::one();
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

/// Inverse of a unit; the caller guarantees is_unit(u).
template <Ring R>
R unit_inverse(const R& u) {
    return *try_exact_div(R::one(), u);
}

} // namespace nagata
