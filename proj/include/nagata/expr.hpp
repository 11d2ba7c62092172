#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "nagata/integer.hpp"
#include "nagata/laurent.hpp"
#include "nagata/poly.hpp"
#include "nagata/rational_function.hpp"

namespace nagata {

// Printing. Output for Integer, PolyZ, LaurentZ and PolyPolyZ is valid
// input to parse_expr and parses back to the same element.
std::string to_string(const Integer& a);
std::string to_string(const PolyZ& p);
std::string to_string(const PolyQ& p);
std::string to_string(const LaurentZ& f);
std::string to_string(const PolyPolyZ& p);
std::string to_string(const RationalFunction& r);
std::string to_string(const PolyRatFun& p);

std::ostream& operator<<(std::ostream& os, const PolyZ& p);
std::ostream& operator<<(std::ostream& os, const PolyQ& p);
std::ostream& operator<<(std::ostream& os, const LaurentZ& f);
std::ostream& operator<<(std::ostream& os, const PolyPolyZ& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& r);
std::ostream& operator<<(std::ostream& os, const PolyRatFun& p);

enum class RingKind { integers, polynomial, laurent, bivariate };

/// "Z", "Z[X]", "Z[T,T^-1]", "Z[X][Y]".
std::string_view ring_name(RingKind kind);

using Element = std::variant<Integer, PolyZ, LaurentZ, PolyPolyZ>;

RingKind ring_of(const Element& e);
std::string to_string(const Element& e);

/**
 * Parses the expression language: integer literals, variables X, Y, T,
 * binary + - *, unary + -, ^ with a nonnegative integer exponent (a
 * negative one only directly after T), parentheses, any whitespace.
 * An integer literal may be written directly before a variable power as
 * its coefficient ("12X", "3X^2"); no other juxtaposition is accepted.
 *
 * The ring is inferred from the variables that appear: none gives Z, X
 * gives Z[X], T gives Z[T,T^-1], Y (with or without X) gives Z[X][Y].
 * Throws ParseError with a 1-based position.
 */
Element parse_expr(std::string_view text);

} // namespace nagata
