#ifndef POLYSTAB_ORACLE_HPP
#define POLYSTAB_ORACLE_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <vector>

#include "polystab/halfplane.hpp"
#include "polystab/polynomial.hpp"

namespace polystab {

// Test-only numeric machinery: a high-precision simultaneous-iteration root
// finder used to cross-validate the exact routines. Never feeds results
// back into library outputs.

using BigFloat = boost::multiprecision::mpfr_float;

struct NumericRoot {
  BigFloat re;
  BigFloat im;
  BigFloat radius;  // certified: the true root lies within this distance
  int multiplicity = 1;
};

// All complex roots of f at the requested working precision. Multiplicities
// come from the square-free decomposition; each square-free factor is solved
// by Aberth-Ehrlich iteration with a posteriori residual radii.
std::vector<NumericRoot> numeric_roots(const Polynomial& f, unsigned precision_bits = 128);

// Counts by sign of the real part, certified against the exact count of
// imaginary-axis roots; escalates precision before giving up.
HalfPlaneCount numeric_half_plane_counts(const Polynomial& f, unsigned precision_bits = 128);

}  // namespace polystab

#endif
