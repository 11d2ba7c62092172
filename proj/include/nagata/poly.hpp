#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nagata/errors.hpp"
#include "nagata/integer.hpp"
#include "nagata/ring.hpp"

namespace nagata {

namespace detail {
// Member Poly::is_zero would hide the free overloads inside the class.
template <class T>
bool coeff_is_zero(const T& c) {
    return is_zero(c);
}
} // namespace detail

/**
 * Dense univariate polynomial over a coefficient ring C, lowest degree
 * first. The zero polynomial is the empty sequence and the last stored
 * coefficient is always nonzero, so structural equality is ring equality.
 *
 * Instantiated as PolyZ (Z[X]), PolyQ (Q[X]), PolyPolyZ (Z[X][Y]) and
 * Poly<RationalFunction> (Frac(Z[X])[Y]).
 */
template <Ring C>
class Poly {
public:
    using coefficient_type = C;

    Poly() = default;
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(C::one()); }
    static Poly constant(const C& c) { return Poly(std::vector<C>{c}); }
    /// c * X^k.
    static Poly monomial(const C& c, std::size_t k) {
        std::vector<C> v(k + 1, C::zero());
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(C::one(), 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Throws DomainError for the zero polynomial.
    std::size_t degree() const {
        if (c_.empty()) throw DomainError("zero polynomial has no degree");
        return c_.size() - 1;
    }
    std::size_t size() const noexcept { return c_.size(); }
    std::span<const C> coefficients() const noexcept { return c_; }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C::zero(); }
    const C& leading() const {
        if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
        return c_.back();
    }

    C eval(const C& x) const {
        C acc = C::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly scaled(const C& k) const {
        std::vector<C> v;
        v.reserve(c_.size());
        for (const C& c : c_) v.push_back(c * k);
        return Poly(std::move(v));
    }

    /// p * X^k.
    Poly shifted(std::size_t k) const {
        if (c_.empty()) return {};
        std::vector<C> v(k, C::zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<C> v;
        v.reserve(a.c_.size());
        for (const C& c : a.c_) v.push_back(-c);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<C> v(a.c_.size() + b.c_.size() - 1, C::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

template <Ring C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero();
}

/// Units of C[X] over a domain are the units of C.
template <Ring C>
bool is_unit(const Poly<C>& p) {
    return p.size() == 1 && is_unit(p.coeff(0));
}

/**
 * Exact long division. Over a domain b | a forces every intermediate
 * leading coefficient to be divisible by lc(b), so the first failed
 * coefficient division proves b does not divide a.
 */
template <Ring C>
std::optional<Poly<C>> try_exact_div(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero()) return Poly<C>();
    if (a.size() < b.size()) return std::nullopt;
    std::vector<C> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<C> q(a.size() - b.size() + 1, C::zero());
    const std::size_t db = b.size() - 1;
    const C& lb = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        const C& top = rem[k + db];
        if (is_zero(top)) continue;
        auto qc = try_exact_div(top, lb);
        if (!qc) return std::nullopt;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - *qc * b.coeff(j);
        q[k] = std::move(*qc);
    }
    for (const C& r : rem) {
        if (!is_zero(r)) return std::nullopt;
    }
    return Poly<C>(std::move(q));
}

/// Unit taken from the leading coefficient: positive for Z[X], monic for
/// Q[X], recursively positive for Z[X][Y].
template <Ring C>
Associate<Poly<C>> canonical_associate(const Poly<C>& p) {
    if (p.is_zero()) return {Poly<C>::one(), Poly<C>()};
    const C u = canonical_associate(p.leading()).unit;
    if (u == C::one()) return {Poly<C>::one(), p};
    const C inv = unit_inverse(u);
    return {Poly<C>::constant(u), p.scaled(inv)};
}

/// Degree first, then coefficients from the top down.
template <Ring C>
std::strong_ordering canonical_compare(const Poly<C>& a, const Poly<C>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        auto c = canonical_compare(a.coeff(i), b.coeff(i));
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division in C.
template <Ring C>
Poly<C> pseudo_remainder(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero() || a.size() < b.size()) return a;
    std::vector<C> r(a.coefficients().begin(), a.coefficients().end());
    const std::size_t db = b.size() - 1;
    const C& lb = b.leading();
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
        const C top = r[k + db];
        for (C& c : r) c = c * lb;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = r[k + j] - top * b.coeff(j);
    }
    return Poly<C>(std::move(r));
}

template <Ring To, Ring From, class F>
Poly<To> map_coefficients(const Poly<From>& p, F&& f) {
    std::vector<To> v;
    v.reserve(p.size());
    for (const From& c : p.coefficients()) v.push_back(f(c));
    return Poly<To>(std::move(v));
}

using PolyZ = Poly<Integer>;
using PolyQ = Poly<Rational>;
using PolyPolyZ = Poly<PolyZ>;

PolyQ to_rational(const PolyZ& p);

/// p = X^m * q with q(0) != 0. Throws DomainError for p == 0.
std::pair<std::size_t, PolyZ> strip_var_power(const PolyZ& p);

/// Largest X-degree among the coefficients of a bivariate polynomial.
std::size_t inner_degree(const PolyPolyZ& p);

} // namespace nagata
