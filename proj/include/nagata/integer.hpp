#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "nagata/ring.hpp"

namespace nagata {

/// Arbitrary-precision integer. Value type; immutable in every public use.
class Integer {
public:
    Integer() = default;
    template <std::signed_integral I>
    Integer(I v) : v_(static_cast<long>(v)) {}
    template <std::unsigned_integral I>
    Integer(I v) : v_(static_cast<unsigned long>(v)) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}
    /// Decimal literal with optional leading sign; throws DomainError.
    static Integer from_string(const std::string& text);

    static Integer zero() { return Integer(); }
    static Integer one() { return Integer(1); }

    const mpz_class& mpz() const noexcept { return v_; }
    int sign() const noexcept { return sgn(v_); }
    bool fits_long() const noexcept { return v_.fits_slong_p(); }
    long to_long() const;
    std::string to_string() const { return v_.get_str(); }
    std::size_t bit_length() const noexcept { return v_ == 0 ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_.get_str(); }

private:
    mpz_class v_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Truncating quotient; throws DomainError on b == 0.
Integer quotient(const Integer& a, const Integer& b);

inline bool is_zero(const Integer& a) { return a.sign() == 0; }
inline bool is_unit(const Integer& a) { return a == Integer(1) || a == Integer(-1); }
std::optional<Integer> try_exact_div(const Integer& a, const Integer& b);
Associate<Integer> canonical_associate(const Integer& a);
inline std::strong_ordering canonical_compare(const Integer& a, const Integer& b) { return a <=> b; }

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}
    Rational(const Integer& n) : v_(n.mpz()) {}
    /// Throws DomainError when den == 0.
    Rational(const Integer& num, const Integer& den);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    Integer num() const { return Integer(mpz_class(v_.get_num())); }
    Integer den() const { return Integer(mpz_class(v_.get_den())); }
    int sign() const noexcept { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    std::string to_string() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    /// Throws DomainError on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.sign() == 0; }
inline bool is_unit(const Rational& a) { return a.sign() != 0; }
std::optional<Rational> try_exact_div(const Rational& a, const Rational& b);
/// Field convention: every nonzero element is its own unit part, normal 1.
Associate<Rational> canonical_associate(const Rational& a);
inline std::strong_ordering canonical_compare(const Rational& a, const Rational& b) { return a <=> b; }

} // namespace nagata
