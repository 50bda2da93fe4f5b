#ifndef POLYSTAB_SIGNRULES_HPP
#define POLYSTAB_SIGNRULES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polystab/polynomial.hpp"
#include "polystab/rational.hpp"

namespace polystab {

enum class Parity { Even, Odd };

// Shape of one parity subsequence of the coefficients of a monic polynomial
// with at most one root in the open right half-plane: all entries positive,
// or positive entries followed by one switch to negative entries (with the
// switch entry itself allowed to vanish).
struct ParitySignPattern {
  enum class Verdict { AllPositive, OneSwitch, AllNegative, AllZero, NoPattern };

  Parity parity = Parity::Even;
  int t = 0;  // index of the last nonzero coefficient of this parity; 0 when none
  Verdict verdict = Verdict::NoPattern;
  int switch_index = 0;         // s (even case: a_{2s} is the switch entry)
  bool zero_at_switch = false;  // switch entry is exactly zero

  bool matches() const { return verdict != Verdict::NoPattern; }
};

struct NewtonEqualityClass {
  enum class Classification { ZeroRootHighMult, AllImaginary, DegenerateForm, StrictInequality };

  struct Pair {
    int k = 0;
    int l = 0;
    std::vector<Classification> classes;  // all applicable; StrictInequality alone otherwise
  };

  bool holds = false;                // every inequality b_k b_l >= b_{k-1} b_{l+1}
  std::vector<Pair> equality_pairs;  // pairs where equality occurs, with classes
};

// Descartes bound: sign changes of the coefficient sequence. The positive
// root count equals the bound or falls short of it by an even number.
std::pair<int, std::string> descartes_bound(const Polynomial& f);

ParitySignPattern parity_sign_pattern(const Polynomial& f, Parity parity);

// Both parity subsequences fit a permitted shape.
bool check_thm41(const Polynomial& f);

// For every k in 1..n-2: a_k <= 0 implies a_{k+2} < 0.
bool check_thm46(const Polynomial& f);

NewtonEqualityClass newton_like(const Polynomial& g);

// Some(mu, h) when g(x) = (x + mu) h(x^2) with mu > 0 and every root of
// h(y) real and negative; None otherwise (including even degree).
std::optional<std::pair<Rational, Polynomial>> degenerate_form(const Polynomial& g);

// Every root -alpha + i beta has alpha > 0 and beta^2 <= 3 alpha^2.
bool obreschkoff_wedge(const std::vector<GaussianRational>& roots, const Rational& r);

// (x - r) ((x + 1)^2 + beta^2)^m, expanded exactly with beta^2 rational.
Polynomial critical_beta_family(int m, const Rational& beta_sq, const Rational& r);

}  // namespace polystab

#endif
