#include "nagata/random.hpp"

#include <functional>
#include <string>

namespace nagata {

RandomElements::RandomElements(std::uint64_t seed, std::string_view stream)
    : rng_(seed ^ (std::hash<std::string_view>{}(stream) * 0x9E3779B97F4A7C15ULL)) {}

Integer RandomElements::nonzero_integer(long bound) {
    while (true) {
        const long v = uniform(-bound, bound);
        if (v != 0) return Integer(v);
    }
}

PolyZ RandomElements::poly_z(std::size_t max_degree, long bound) {
    const auto deg = static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree)));
    std::vector<Integer> c;
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(integer(bound));
    return PolyZ(std::move(c));
}

PolyZ RandomElements::nonzero_poly_z(std::size_t max_degree, long bound) {
    while (true) {
        PolyZ p = poly_z(max_degree, bound);
        if (!p.is_zero()) return p;
    }
}

PolyQ RandomElements::poly_q(std::size_t max_degree, long bound) {
    const auto deg = static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree)));
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(integer(bound), nonzero_integer(bound));
    return PolyQ(std::move(c));
}

LaurentZ RandomElements::laurent(long max_span, long bound) {
    const long low = uniform(-max_span, max_span);
    return LaurentZ(low, poly_z(static_cast<std::size_t>(max_span), bound));
}

PolyPolyZ RandomElements::poly_poly(std::size_t deg_y, std::size_t deg_x, long bound) {
    const auto dy = static_cast<std::size_t>(uniform(0, static_cast<long>(deg_y)));
    std::vector<PolyZ> c;
    for (std::size_t j = 0; j <= dy; ++j) c.push_back(poly_z(deg_x, bound));
    return PolyPolyZ(std::move(c));
}

RationalFunction RandomElements::rational_function(std::size_t max_degree, long bound) {
    return RationalFunction(poly_z(max_degree, bound), nonzero_poly_z(max_degree, bound));
}

} // namespace nagata
