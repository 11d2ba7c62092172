#include "nagata/rational_function.hpp"

#include "nagata/gauss.hpp"

namespace nagata {

RationalFunction::RationalFunction(const PolyZ& num, const PolyZ& den) {
    if (den.is_zero()) throw DomainError("division by zero");
    if (num.is_zero()) {
        den_ = PolyZ::one();
        return;
    }
    const PolyZ g = gcd(num, den);
    num_ = *try_exact_div(num, g);
    den_ = *try_exact_div(den, g);
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (is_zero(b)) throw DomainError("division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<RationalFunction> try_exact_div(const RationalFunction& a, const RationalFunction& b) {
    return a / b;
}

Associate<RationalFunction> canonical_associate(const RationalFunction& a) {
    if (is_zero(a)) return {RationalFunction::one(), RationalFunction()};
    return {a, RationalFunction::one()};
}

std::strong_ordering canonical_compare(const RationalFunction& a, const RationalFunction& b) {
    auto c = canonical_compare(a.num(), b.num());
    if (c != std::strong_ordering::equal) return c;
    return canonical_compare(a.den(), b.den());
}

} // namespace nagata
