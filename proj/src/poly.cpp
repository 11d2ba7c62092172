#include "nagata/poly.hpp"

namespace nagata {

PolyQ to_rational(const PolyZ& p) {
    return map_coefficients<Rational>(p, [](const Integer& c) { return Rational(c); });
}

std::pair<std::size_t, PolyZ> strip_var_power(const PolyZ& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    std::size_t m = 0;
    while (is_zero(p.coeff(m))) ++m;
    const auto c = p.coefficients();
    return {m, PolyZ(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(m), c.end()))};
}

std::size_t inner_degree(const PolyPolyZ& p) {
    std::size_t d = 0;
    for (const PolyZ& c : p.coefficients()) {
        if (!c.is_zero()) d = std::max(d, c.degree());
    }
    return d;
}

} // namespace nagata
