#include "nagata/laurent.hpp"

#include <algorithm>

namespace nagata {

LaurentZ::LaurentZ(long low, const PolyZ& p) {
    if (p.is_zero()) return;
    auto [m, q] = strip_var_power(p);
    low_ = low + static_cast<long>(m);
    body_ = std::move(q);
}

LaurentZ operator+(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.low_, b.low_);
    const PolyZ sum = a.body_.shifted(static_cast<std::size_t>(a.low_ - lo)) +
                      b.body_.shifted(static_cast<std::size_t>(b.low_ - lo));
    return LaurentZ(lo, sum);
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentZ(a.low_ + b.low_, a.body_ * b.body_);
}

bool is_unit(const LaurentZ& a) {
    return is_unit(a.body());
}

// Bodies have nonzero constant terms, so they are coprime to T and b | a in
// the Laurent ring exactly when body(b) | body(a) in Z[T].
std::optional<LaurentZ> try_exact_div(const LaurentZ& a, const LaurentZ& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero()) return LaurentZ();
    auto q = try_exact_div(a.body(), b.body());
    if (!q) return std::nullopt;
    return LaurentZ(a.low() - b.low(), *q);
}

Associate<LaurentZ> canonical_associate(const LaurentZ& a) {
    if (a.is_zero()) return {LaurentZ::one(), LaurentZ()};
    auto [u, n] = canonical_associate(a.body());
    return {LaurentZ(a.low(), u), LaurentZ(0, n)};
}

std::strong_ordering canonical_compare(const LaurentZ& a, const LaurentZ& b) {
    if (a.low() != b.low()) return a.low() <=> b.low();
    return canonical_compare(a.body(), b.body());
}

std::pair<std::size_t, PolyZ> laurent_to_poly(const LaurentZ& f) {
    if (f.is_zero()) return {0, PolyZ()};
    const std::size_t n = f.low() < 0 ? static_cast<std::size_t>(-f.low()) : 0;
    const std::size_t shift = f.low() > 0 ? static_cast<std::size_t>(f.low()) : 0;
    return {n, f.body().shifted(shift)};
}

} // namespace nagata
