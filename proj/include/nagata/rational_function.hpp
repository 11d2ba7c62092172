#pragma once

#include <optional>

#include "nagata/poly.hpp"

namespace nagata {

/// Element of Frac(Z[X]), always reduced with a canonical (positive
/// leading coefficient) denominator. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(PolyZ::one()) {}
    RationalFunction(const PolyZ& num) : num_(num), den_(PolyZ::one()) {}
    /// Throws DomainError when den == 0.
    RationalFunction(const PolyZ& num, const PolyZ& den);

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(PolyZ::one()); }

    const PolyZ& num() const noexcept { return num_; }
    const PolyZ& den() const noexcept { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    /// Throws DomainError on division by zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

private:
    PolyZ num_;
    PolyZ den_;
};

inline bool is_zero(const RationalFunction& a) { return a.num().is_zero(); }
inline bool is_unit(const RationalFunction& a) { return !a.num().is_zero(); }
std::optional<RationalFunction> try_exact_div(const RationalFunction& a, const RationalFunction& b);
Associate<RationalFunction> canonical_associate(const RationalFunction& a);
std::strong_ordering canonical_compare(const RationalFunction& a, const RationalFunction& b);

using PolyRatFun = Poly<RationalFunction>;

} // namespace nagata
