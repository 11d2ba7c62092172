#include "nagata/integer.hpp"

#include "nagata/errors.hpp"

namespace nagata {

Integer Integer::from_string(const std::string& text) {
    mpz_class v;
    std::string digits = text;
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    if (digits.empty() || v.set_str(digits, 10) != 0) {
        throw DomainError("not an integer literal: '" + text + "'");
    }
    return Integer(std::move(v));
}

long Integer::to_long() const {
    if (!fits_long()) throw LimitError("integer does not fit in 64 bits: " + to_string());
    return v_.get_si();
}

Integer abs(const Integer& a) {
    return Integer(mpz_class(::abs(a.mpz())));
}

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(std::move(g));
}

Integer lcm(const Integer& a, const Integer& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(std::move(l));
}

Integer quotient(const Integer& a, const Integer& b) {
    if (is_zero(b)) throw DomainError("division by zero");
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(std::move(q));
}

std::optional<Integer> try_exact_div(const Integer& a, const Integer& b) {
    if (is_zero(b)) throw DomainError("division by zero");
    if (mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t()) == 0) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Integer(std::move(q));
}

Associate<Integer> canonical_associate(const Integer& a) {
    if (a.sign() < 0) return {Integer(-1), -a};
    return {Integer(1), a};
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (is_zero(den)) throw DomainError("division by zero");
    v_ = mpq_class(num.mpz(), den.mpz());
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw DomainError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::optional<Rational> try_exact_div(const Rational& a, const Rational& b) {
    return a / b;
}

Associate<Rational> canonical_associate(const Rational& a) {
    if (is_zero(a)) return {Rational(1), Rational()};
    return {a, Rational(1)};
}

} // namespace nagata
