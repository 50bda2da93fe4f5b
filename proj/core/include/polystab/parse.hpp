#ifndef POLYSTAB_PARSE_HPP
#define POLYSTAB_PARSE_HPP

#include <string>
#include <vector>

#include "polystab/polynomial.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Grammar: signed terms `c`, `c x`, `c x^k`, `x^k` with c an integer or
// `p/q`; whitespace-insensitive; repeated powers are summed.
Polynomial parse_polynomial(const std::string& text);

// Comma-separated coefficients, highest power first, e.g. "1,-1,3,0,-4,1".
Polynomial parse_coefficient_list(const std::string& text);

// Comma-separated `a`, `a+bi`, `a-bi` (also bare `bi`) with rational a, b.
std::vector<GaussianRational> parse_spectrum(const std::string& text);

// A single signed rational, `p` or `p/q`.
Rational parse_rational(const std::string& text);

}  // namespace polystab

#endif
