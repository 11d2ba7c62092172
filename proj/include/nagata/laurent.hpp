#pragma once

#include <optional>
#include <utility>

#include "nagata/poly.hpp"

namespace nagata {

/**
 * Element of Z[T, T^-1] stored as T^low * body with body(0) != 0.
 * Zero is (0, 0).
 */
class LaurentZ {
public:
    LaurentZ() = default;
    /// T^low * p, renormalized so the body has a nonzero constant term.
    LaurentZ(long low, const PolyZ& p);
    explicit LaurentZ(const PolyZ& p) : LaurentZ(0, p) {}

    static LaurentZ zero() { return LaurentZ(); }
    static LaurentZ one() { return LaurentZ(0, PolyZ::one()); }
    /// T^k for any integer k.
    static LaurentZ t_power(long k) { return LaurentZ(k, PolyZ::one()); }

    long low() const noexcept { return low_; }
    const PolyZ& body() const noexcept { return body_; }
    bool is_zero() const noexcept { return body_.is_zero(); }
    /// Highest exponent present; throws DomainError on zero.
    long high() const { return low_ + static_cast<long>(body_.degree()); }

    friend LaurentZ operator+(const LaurentZ& a, const LaurentZ& b);
    friend LaurentZ operator-(const LaurentZ& a) { return LaurentZ(a.low_, -a.body_); }
    friend LaurentZ operator-(const LaurentZ& a, const LaurentZ& b) { return a + (-b); }
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
    friend bool operator==(const LaurentZ& a, const LaurentZ& b) = default;

private:
    long low_ = 0;
    PolyZ body_;
};

inline bool is_zero(const LaurentZ& a) { return a.is_zero(); }
/// Units are exactly +-T^k.
bool is_unit(const LaurentZ& a);
std::optional<LaurentZ> try_exact_div(const LaurentZ& a, const LaurentZ& b);
/// Unit +-T^low; normal form has low 0 and positive leading coefficient.
Associate<LaurentZ> canonical_associate(const LaurentZ& a);
std::strong_ordering canonical_compare(const LaurentZ& a, const LaurentZ& b);

/// f * T^n == p with n = max(0, -low(f)).
std::pair<std::size_t, PolyZ> laurent_to_poly(const LaurentZ& f);

} // namespace nagata
