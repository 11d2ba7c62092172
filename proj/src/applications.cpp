#include "nagata/applications.hpp"

#include <chrono>

namespace nagata {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <Ring R>
std::vector<R> distinct_factors(const PrimeFactorization<R>& f) {
    std::vector<R> out;
    for (const auto& [p, k] : f.multiplicities()) out.push_back(p);
    return out;
}

template <Ring R>
bool same_factorization(const PrimeFactorization<R>& a, const PrimeFactorization<R>& b) {
    return check_factorization_unique(a, b).has_value();
}

} // namespace

PrimeFactorization<LaurentZ> factor_laurent(const LaurentZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    const auto [n, p] = laurent_to_poly(f);
    const auto [m, q] = strip_var_power(p);
    const auto base = factor_poly_ZX(q);
    const PolyZ t = PolyZ::variable();
    std::vector<LaurentZ> factors;
    for (const PolyZ& r : base.factors) {
        if (divides(r, t)) throw OracleViolation("Laurent factor divides T: " + to_string(r));
        if (!is_prime(r)) throw OracleViolation("Laurent factor is not prime in Z[X]: " + to_string(r));
        factors.emplace_back(r);
    }
    const long shift = static_cast<long>(m) - static_cast<long>(n);
    auto out = make_factorization(LaurentZ(shift, base.unit), std::move(factors));
    if (out.value() != f) throw OracleViolation("Laurent factorization does not reconstruct");
    return out;
}

DescentResult<PolyZ> factor_zx_via_laurent(const PolyZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    const LaurentOracle oracle;
    auto general = descend_factor(f, oracle.submonoid(), oracle);
    const auto pou = descend_factor_pou(f, oracle.submonoid(), oracle);
    if (!same_factorization(general.factorization, pou.factorization)) {
        throw OracleViolation("prime-generated and prime-or-unit chains disagree: " +
                              render_factorization(general.factorization) + " vs " +
                              render_factorization(pou.factorization));
    }
    return general;
}

std::vector<Integer> fraction_field_generators(const PolyZ& f) {
    return distinct_factors(factor_integer(f.leading()));
}

DescentResult<PolyZ> factor_zx_via_fraction_field(const PolyZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    const RationalOracle oracle(fraction_field_generators(f));
    return descend_factor(f, oracle.submonoid(), oracle);
}

DescentResult<Integer> factor_integer_certified(const Integer& n) {
    const IntegerOracle oracle(GeneratedSubmonoid<Integer>(distinct_factors(factor_integer(n))));
    return descend_factor(n, oracle.submonoid(), oracle);
}

std::vector<PolyZ> iterated_generators(const PolyPolyZ& f) {
    return distinct_factors(factor_poly_ZX(f.leading()));
}

IteratedResult factor_iterated(const PolyPolyZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    if (f.degree() > EngineLimits::max_bivariate_degree || inner_degree(f) > EngineLimits::max_bivariate_degree) {
        throw LimitError("desk-scale limit: bivariate degrees must be at most 4 in X and in Y");
    }
    IteratedResult out{factor_bivariate(f), {}};
    const RationalFunctionOracle oracle(iterated_generators(f));
    out.nagata = descend_factor(f, oracle.submonoid(), oracle);
    if (!same_factorization(out.base, out.nagata.factorization)) {
        throw OracleViolation("base engine and descent disagree: " + render_factorization(out.base) + " vs " +
                              render_factorization(out.nagata.factorization));
    }
    return out;
}

CompareReport compare_routes(const PolyZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    CompareReport out;
    auto start = std::chrono::steady_clock::now();
    out.direct = factor_poly_ZX(f);
    out.timings.direct_ms = elapsed_ms(start);
    start = std::chrono::steady_clock::now();
    out.laurent = factor_zx_via_laurent(f);
    out.timings.laurent_ms = elapsed_ms(start);
    start = std::chrono::steady_clock::now();
    out.fracfield = factor_zx_via_fraction_field(f);
    out.timings.fracfield_ms = elapsed_ms(start);

    const std::pair<const char*, const PrimeFactorization<PolyZ>*> routes[] = {
        {"direct", &out.direct}, {"laurent", &out.laurent.factorization}, {"fracfield", &out.fracfield.factorization}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!same_factorization(*routes[i].second, *routes[j].second)) {
                throw OracleViolation(std::string("routes disagree on ") + to_string(f) + ": " + routes[i].first +
                                      " gives " + render_factorization(*routes[i].second) + ", " + routes[j].first +
                                      " gives " + render_factorization(*routes[j].second));
            }
        }
    }
    return out;
}

std::string_view route_name(Route r) {
    switch (r) {
    case Route::direct: return "direct";
    case Route::fraction_field: return "fracfield";
    case Route::laurent: return "laurent";
    case Route::iterated: return "iterated";
    case Route::automatic: return "auto";
    }
    return "auto";
}

Route parse_route(std::string_view name) {
    if (name == "direct") return Route::direct;
    if (name == "fracfield") return Route::fraction_field;
    if (name == "laurent") return Route::laurent;
    if (name == "iterated") return Route::iterated;
    if (name == "auto") return Route::automatic;
    throw PreconditionError("unknown route: " + std::string(name));
}

namespace {

template <Ring R>
std::string describe_submonoid(const GeneratedSubmonoid<R>& S) {
    std::string out = "<";
    for (std::size_t i = 0; i < S.rank(); ++i) {
        if (i != 0) out += ", ";
        out += to_string(S.generators()[i]);
    }
    return out + ">";
}

template <Ring R>
std::string certificate_detail(const PrimalityCertificate<R>& c, const GeneratedSubmonoid<R>& S) {
    if (c.kind == CertificateCase::generator) {
        std::string out = "associate of generator " + to_string(S.generators()[c.generator_index]);
        if (c.unit != R::one()) out += " with unit " + to_string(c.unit);
        return out;
    }
    return "avoids S = " + describe_submonoid(S) + "; prime in " + c.attestation;
}

template <Ring R>
void fill_report(FactorReport& rep, const PrimeFactorization<R>& f, const std::vector<PrimalityCertificate<R>>& certs,
                 const LocalizationOracle<R>& oracle) {
    const GeneratedSubmonoid<R>& S = oracle.submonoid();
    rep.unit = to_string(f.unit);
    std::size_t index = 0;
    for (const auto& [p, k] : f.multiplicities()) {
        const PrimalityCertificate<R>& c = certs.at(index);
        if (!c.replay(S, oracle)) throw OracleViolation("certificate replay failed for " + to_string(p));
        rep.factors.push_back(ReportFactor{to_string(p), k, case_name(c.kind), certificate_detail(c, S), true});
        index += k;
    }
    rep.rendering += render_factorization(f);
}

template <Ring R>
std::vector<PrimalityCertificate<R>> certify_all(const PrimeFactorization<R>& f, const LocalizationOracle<R>& oracle) {
    std::vector<PrimalityCertificate<R>> out;
    for (const R& p : f.factors) out.push_back(is_prime_nagata(p, oracle.submonoid(), oracle));
    return out;
}

void report_integer(FactorReport& rep, const Integer& n) {
    const auto r = factor_integer_certified(n);
    const auto direct = factor_integer(n);
    if (direct != r.factorization) throw OracleViolation("integer descent disagrees with trial division");
    const IntegerOracle oracle(GeneratedSubmonoid<Integer>(distinct_factors(direct)));
    fill_report(rep, direct, r.certificates, oracle);
}

void report_polynomial(FactorReport& rep, const PolyZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    switch (rep.route) {
    case Route::direct: {
        const auto direct = factor_poly_ZX(f);
        const RationalOracle oracle(fraction_field_generators(f));
        fill_report(rep, direct, certify_all(direct, oracle), oracle);
        return;
    }
    case Route::laurent: {
        const auto r = factor_zx_via_laurent(f);
        fill_report(rep, r.factorization, r.certificates, LaurentOracle());
        return;
    }
    case Route::fraction_field: {
        const auto r = factor_zx_via_fraction_field(f);
        fill_report(rep, r.factorization, r.certificates, RationalOracle(fraction_field_generators(f)));
        return;
    }
    default: throw DomainError("route " + std::string(route_name(rep.route)) + " does not apply to Z[X]");
    }
}

void report_laurent(FactorReport& rep, const LaurentZ& f) {
    const auto fac = factor_laurent(f);
    const LaurentOracle oracle;
    rep.unit = to_string(fac.unit);
    for (const auto& [p, k] : fac.multiplicities()) {
        const auto c = is_prime_nagata(p.body(), oracle.submonoid(), oracle);
        if (!c.replay(oracle.submonoid(), oracle)) throw OracleViolation("certificate replay failed for " + to_string(p));
        rep.factors.push_back(ReportFactor{to_string(p), k, case_name(c.kind), "prime in Z[T] and does not divide T", true});
    }
    rep.rendering += render_factorization(fac);
}

void report_bivariate(FactorReport& rep, const PolyPolyZ& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    const RationalFunctionOracle oracle(iterated_generators(f));
    if (rep.route == Route::direct) {
        const auto base = factor_bivariate(f);
        fill_report(rep, base, certify_all(base, oracle), oracle);
    } else {
        const auto r = factor_iterated(f);
        fill_report(rep, r.nagata.factorization, r.nagata.certificates, oracle);
    }
}

Route resolve(Route requested, RingKind ring) {
    const bool ok = [&] {
        switch (ring) {
        case RingKind::integers: return requested != Route::iterated;
        case RingKind::polynomial: return requested != Route::iterated;
        case RingKind::laurent:
            return requested == Route::automatic || requested == Route::laurent || requested == Route::direct;
        case RingKind::bivariate:
            return requested == Route::automatic || requested == Route::iterated || requested == Route::direct;
        }
        return false;
    }();
    if (!ok) {
        throw DomainError("route " + std::string(route_name(requested)) + " does not apply to " +
                          std::string(ring_name(ring)));
    }
    if (requested != Route::automatic) {
        return ring == RingKind::laurent ? Route::laurent : requested;
    }
    switch (ring) {
    case RingKind::integers: return Route::direct;
    case RingKind::polynomial: return Route::fraction_field;
    case RingKind::laurent: return Route::laurent;
    case RingKind::bivariate: return Route::iterated;
    }
    return Route::direct;
}

} // namespace

FactorReport factor_report(std::string_view input, Route route) {
    const auto start = std::chrono::steady_clock::now();
    const Element e = parse_expr(input);
    FactorReport rep;
    rep.input = std::string(input);
    rep.ring = ring_of(e);
    rep.route = resolve(route, rep.ring);
    rep.rendering = to_string(e) + " = ";
    if (const auto* n = std::get_if<Integer>(&e)) {
        if (rep.route == Route::direct) {
            report_integer(rep, *n);
        } else {
            report_polynomial(rep, PolyZ::constant(*n));
        }
    } else if (const auto* p = std::get_if<PolyZ>(&e)) {
        report_polynomial(rep, *p);
    } else if (const auto* l = std::get_if<LaurentZ>(&e)) {
        report_laurent(rep, *l);
    } else {
        report_bivariate(rep, std::get<PolyPolyZ>(e));
    }
    rep.elapsed_ms = elapsed_ms(start);
    return rep;
}

} // namespace nagata
