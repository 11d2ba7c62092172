#pragma once

#include <utility>

#include "nagata/errors.hpp"
#include "nagata/poly.hpp"

namespace nagata {

/**
 * Content and primitive part over a GCD domain D (Z or Z[X]), and the
 * primitive-remainder-sequence gcd in D[Y] built on them. gcd(D, D) must
 * return a canonical associate.
 */

/// Canonical gcd of the coefficients. Throws DomainError for p == 0.
template <Ring D>
D content(const Poly<D>& p) {
    if (p.is_zero()) throw DomainError("content of the zero polynomial");
    D g = D::zero();
    for (const D& c : p.coefficients()) {
        g = gcd(g, c);
        if (is_unit(g)) break;
    }
    return canonical(g);
}

/// p / content(p), with the sign folded into canonical form.
template <Ring D>
Poly<D> primitive_part(const Poly<D>& p) {
    const D c = content(p);
    std::vector<D> v;
    v.reserve(p.size());
    for (const D& x : p.coefficients()) v.push_back(*try_exact_div(x, c));
    return canonical(Poly<D>(std::move(v)));
}

template <Ring D>
Poly<D> gcd(const Poly<D>& a, const Poly<D>& b) {
    if (a.is_zero()) return canonical(b);
    if (b.is_zero()) return canonical(a);
    const D g = gcd(content(a), content(b));
    Poly<D> x = primitive_part(a);
    Poly<D> y = primitive_part(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly<D> r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? std::move(r) : primitive_part(r);
    }
    return canonical(x.scaled(g));
}

} // namespace nagata
