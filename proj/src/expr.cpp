#include "nagata/expr.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "nagata/errors.hpp"

namespace nagata {

namespace {

struct Term {
    Integer coeff;
    std::string monomial;  // empty for the constant monomial
};

std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms) {
        const bool negative = t.coeff.sign() < 0;
        const Integer mag = abs(t.coeff);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.monomial.empty()) {
            out += mag.to_string();
        } else if (mag == Integer(1)) {
            out += t.monomial;
        } else {
            out += mag.to_string() + "*" + t.monomial;
        }
    }
    return out;
}

std::string var_power(char var, long k) {
    if (k == 0) return {};
    if (k == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(k);
}

std::string times(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

bool needs_parens(const std::string& s) {
    return s.find(' ') != std::string::npos;
}

} // namespace

std::string to_string(const Integer& a) {
    return a.to_string();
}

std::string to_string(const PolyZ& p) {
    std::vector<Term> terms;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (!is_zero(p.coeff(i))) terms.push_back({p.coeff(i), var_power('X', static_cast<long>(i))});
    }
    return join_terms(terms);
}

std::string to_string(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational c = p.coeff(i);
        if (is_zero(c)) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        const std::string mono = var_power('X', static_cast<long>(i));
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

std::string to_string(const LaurentZ& f) {
    std::vector<Term> terms;
    const PolyZ& b = f.body();
    for (std::size_t i = b.size(); i-- > 0;) {
        if (!is_zero(b.coeff(i))) terms.push_back({b.coeff(i), var_power('T', f.low() + static_cast<long>(i))});
    }
    return join_terms(terms);
}

std::string to_string(const PolyPolyZ& p) {
    std::vector<Term> terms;
    for (std::size_t j = p.size(); j-- > 0;) {
        const PolyZ& c = p.coefficients()[j];
        for (std::size_t i = c.size(); i-- > 0;) {
            if (is_zero(c.coeff(i))) continue;
            terms.push_back({c.coeff(i), times(var_power('X', static_cast<long>(i)), var_power('Y', static_cast<long>(j)))});
        }
    }
    return join_terms(terms);
}

std::string to_string(const RationalFunction& r) {
    const std::string n = to_string(r.num());
    if (r.den() == PolyZ::one()) return n;
    const std::string d = to_string(r.den());
    return (needs_parens(n) ? "(" + n + ")" : n) + "/" + (needs_parens(d) || !r.den().is_constant() ? "(" + d + ")" : d);
}

std::string to_string(const PolyRatFun& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t j = p.size(); j-- > 0;) {
        const RationalFunction& c = p.coefficients()[j];
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        const std::string mono = var_power('Y', static_cast<long>(j));
        const std::string cs = to_string(c);
        if (mono.empty()) {
            out += cs;
        } else if (c == RationalFunction::one()) {
            out += mono;
        } else {
            out += (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PolyZ& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const LaurentZ& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const PolyPolyZ& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << to_string(r); }
std::ostream& operator<<(std::ostream& os, const PolyRatFun& p) { return os << to_string(p); }

std::string_view ring_name(RingKind kind) {
    switch (kind) {
    case RingKind::integers: return "Z";
    case RingKind::polynomial: return "Z[X]";
    case RingKind::laurent: return "Z[T,T^-1]";
    case RingKind::bivariate: return "Z[X][Y]";
    }
    return "?";
}

RingKind ring_of(const Element& e) {
    return static_cast<RingKind>(e.index());
}

std::string to_string(const Element& e) {
    return std::visit([](const auto& v) { return to_string(v); }, e);
}

namespace {

// Exponents of (X, Y, T).
using Monomial = std::array<long, 3>;

/// Sparse polynomial in X, Y, T^(+-1) used only while parsing.
struct Sparse {
    std::map<Monomial, Integer> terms;

    static Sparse constant(const Integer& c) {
        Sparse s;
        if (!is_zero(c)) s.terms[{0, 0, 0}] = c;
        return s;
    }
    static Sparse var(int index, long k) {
        Sparse s;
        Monomial m{0, 0, 0};
        m[static_cast<std::size_t>(index)] = k;
        s.terms[m] = Integer(1);
        return s;
    }

    friend Sparse operator+(Sparse a, const Sparse& b) {
        for (const auto& [m, c] : b.terms) {
            Integer& slot = a.terms[m];
            slot += c;
            if (is_zero(slot)) a.terms.erase(m);
        }
        return a;
    }
    friend Sparse operator-(Sparse a) {
        for (auto& [m, c] : a.terms) c = -c;
        return a;
    }
    friend Sparse operator*(const Sparse& a, const Sparse& b) {
        Sparse out;
        for (const auto& [ma, ca] : a.terms) {
            for (const auto& [mb, cb] : b.terms) {
                const Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
                Integer& slot = out.terms[m];
                slot += ca * cb;
                if (is_zero(slot)) out.terms.erase(m);
            }
        }
        return out;
    }
};

constexpr long max_exponent = 64;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Element parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        Sparse value = expr();
        skip_space();
        if (!at_end()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
                fail("implicit multiplication is not allowed; use '*'");
            }
            fail(std::string("unexpected '") + c + "'");
        }
        return convert(value);
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Sparse expr() {
        Sparse acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc + (-term());
            } else {
                return acc;
            }
        }
    }

    Sparse term() {
        Sparse acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Sparse factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        return power();
    }

    Sparse power() {
        skip_space();
        if (at_end()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer lit = integer_literal();
            if (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                return Sparse::constant(lit) * variable_power();
            }
            if (accept('^')) return pow(Sparse::constant(lit), nonnegative_exponent());
            return Sparse::constant(lit);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return variable_power();
        if (c == '(') {
            ++pos_;
            Sparse inner = expr();
            if (!accept(')')) fail("expected ')'");
            if (accept('^')) return pow(inner, nonnegative_exponent());
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Sparse variable_power() {
        const std::size_t at = pos_;
        const char c = text_[pos_];
        int index = -1;
        if (c == 'X') index = 0;
        if (c == 'Y') index = 1;
        if (c == 'T') index = 2;
        if (index < 0) fail(std::string("unknown variable '") + c + "'");
        ++pos_;
        note_variable(index, at);
        if (!accept('^')) return Sparse::var(index, 1);
        skip_space();
        bool negative = false;
        if (!at_end() && text_[pos_] == '-') {
            if (index != 2) fail(std::string("negative exponent on ") + c + "; only T admits negative exponents");
            negative = true;
            ++pos_;
        }
        const long k = exponent_value();
        return Sparse::var(index, negative ? -k : k);
    }

    long nonnegative_exponent() {
        skip_space();
        if (!at_end() && text_[pos_] == '-') fail("negative exponent is only allowed directly after T");
        return exponent_value();
    }

    long exponent_value() {
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer exponent");
        const Integer k = integer_literal();
        if (k > Integer(max_exponent)) fail("exponent too large (limit 64)");
        return k.to_long();
    }

    Integer integer_literal() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer::from_string(std::string(text_.substr(start, pos_ - start)));
    }

    static Sparse pow(const Sparse& base, long k) {
        Sparse out = Sparse::constant(Integer(1));
        for (long i = 0; i < k; ++i) out = out * base;
        return out;
    }

    void note_variable(int index, std::size_t at) {
        if (!seen_[static_cast<std::size_t>(index)]) {
            seen_[static_cast<std::size_t>(index)] = true;
            first_at_[static_cast<std::size_t>(index)] = at;
        }
        const bool poly_vars = seen_[0] || seen_[1];
        if (poly_vars && seen_[2]) {
            throw ParseError(at + 1, "T cannot be combined with X or Y");
        }
    }

    Element convert(const Sparse& s) const {
        if (seen_[2]) {
            long low = 0;
            for (const auto& [m, c] : s.terms) low = std::min(low, m[2]);
            std::vector<Integer> body;
            for (const auto& [m, c] : s.terms) {
                const auto i = static_cast<std::size_t>(m[2] - low);
                if (body.size() <= i) body.resize(i + 1);
                body[i] = c;
            }
            return LaurentZ(low, PolyZ(std::move(body)));
        }
        if (seen_[1]) {
            std::vector<std::vector<Integer>> rows;
            for (const auto& [m, c] : s.terms) {
                const auto j = static_cast<std::size_t>(m[1]);
                const auto i = static_cast<std::size_t>(m[0]);
                if (rows.size() <= j) rows.resize(j + 1);
                if (rows[j].size() <= i) rows[j].resize(i + 1);
                rows[j][i] = c;
            }
            std::vector<PolyZ> coeffs;
            for (auto& r : rows) coeffs.emplace_back(std::move(r));
            return PolyPolyZ(std::move(coeffs));
        }
        if (seen_[0]) {
            std::vector<Integer> coeffs;
            for (const auto& [m, c] : s.terms) {
                const auto i = static_cast<std::size_t>(m[0]);
                if (coeffs.size() <= i) coeffs.resize(i + 1);
                coeffs[i] = c;
            }
            return PolyZ(std::move(coeffs));
        }
        auto it = s.terms.find({0, 0, 0});
        return it == s.terms.end() ? Integer(0) : it->second;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::array<bool, 3> seen_{false, false, false};
    std::array<std::size_t, 3> first_at_{0, 0, 0};
};

} // namespace

Element parse_expr(std::string_view text) {
    return Parser(text).parse();
}

} // namespace nagata
