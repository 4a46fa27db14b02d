#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "brf/poly.hpp"
#include "brf/poly_xy.hpp"

namespace brf {

/// Parses one polynomial: terms joined by '+'/'-', each term a '*'-separated
/// product of rationals ("p" or "p/q") and variable powers "xK^E" with K in 1..nvars.
/// Whitespace is ignored. Throws ParseError.
Poly parse_poly(std::string_view text, std::size_t nvars);

/// Same grammar over the doubled variable set; accepts "yK" as well as "xK".
PolyXY parse_poly_xy(std::string_view text, std::size_t nvars);

/// Reads one polynomial per non-blank line; '#' starts a comment.
std::vector<Poly> parse_poly_lines(std::istream& in, std::size_t nvars);

/// Counts the variables a system file needs: the largest K appearing in "xK".
std::size_t infer_nvars(std::string_view text);

/// Canonical text: descending graded-lex order, e.g. "3/2*x1^2*x2 - x2 + 1".
std::string to_string(const Poly& p);
std::string to_string(const PolyXY& p);

inline Poly poly_parse(std::string_view text, std::size_t nvars) { return parse_poly(text, nvars); }
inline std::string poly_print(const Poly& p) { return to_string(p); }

}  // namespace brf
