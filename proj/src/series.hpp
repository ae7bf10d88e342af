#ifndef HILB_SERIES_HPP
#define HILB_SERIES_HPP

#include "polynomial.hpp"

namespace hilb {

// The rational function Q(t)/(1-t)^d.
struct HilbertSeries {
  IntPolynomial numerator;
  unsigned dim = 0;

  bool operator==(const HilbertSeries& rhs) const = default;
};

// First N exact coefficients of some Q(t)/(1-t)^k, tagged with k.
struct SeriesPrefix {
  unsigned denom_exp = 0;
  std::vector<Int> coeffs;
};

// First N coefficients of Q(t)/(1-t)^k. Binomial convolution with the
// incremental recurrence C(n+k-1,k-1); exact integers throughout.
SeriesPrefix expand(const IntPolynomial& q, unsigned k, std::size_t n);

// Remove (1-t) factors shared between numerator and denominator. Equal to
// the input as a formal power series; for d=0 a nonzero polynomial is its
// own canonical form. The zero series canonicalizes to (0, d=0).
HilbertSeries canonicalize(const HilbertSeries& h);

// Exact decision: every coefficient of the full expansion of H is >= 0.
// Expects H canonicalized.
bool is_nonnegative_series(const HilbertSeries& h);

// Throws NotNonnegative unless is_nonnegative_series(h).
void require_nonnegative(const HilbertSeries& h);

}  // namespace hilb

#endif
