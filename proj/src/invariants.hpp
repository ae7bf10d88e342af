#ifndef HILB_INVARIANTS_HPP
#define HILB_INVARIANTS_HPP

#include <optional>

#include "series.hpp"

namespace hilb {

struct InvariantReport {
  unsigned dim = 0;
  IntPolynomial numerator;
  unsigned hdepth = 0;
  unsigned hprojdim = 0;
  unsigned hreg = 0;
  unsigned delta_d_tilde = 0;
  std::optional<long> deg_numerator;  // none for the zero numerator
  std::optional<long> deg_series;     // deg Q - d; none for the zero series
  std::optional<unsigned> width_k;    // minimal corner-free width; none in case (i)
};

// Least k such that the first d coefficients of Q/(1-t)^k are nonnegative.
// d=0 returns 0 vacuously. Throws InfiniteDelta when the lowest
// nonvanishing coefficient of Q is negative.
unsigned delta_d(const IntPolynomial& q, unsigned d);

// delta(Q) for standalone Q: least k making the whole expansion of
// Q/(1-t)^k nonnegative, searched up to `budget`; throws BudgetExceeded.
unsigned delta_budgeted(const IntPolynomial& q, unsigned budget);

// Hilbert projective dimension delta(Q): least k with Q/(1-t)^k
// nonnegative, computed exactly via e = max{delta_d(Qt), deg Q + 1}.
// Requires H canonicalized and nonnegative.
unsigned hprojdim(const HilbertSeries& h);

// d - hprojdim(H); the maximum r with (1-t)^r H nonnegative.
unsigned hdepth(const HilbertSeries& h);

// Hilbert regularity: least k admitting a nonnegative (0,k)-boundary
// presentation. Requires H canonicalized and nonnegative.
unsigned hreg(const HilbertSeries& h);

// Width k of the minimal nonnegative corner-free presentation; nullopt
// when deg Q <= d or delta_d(Qt) >= deg Q.
std::optional<unsigned> hreg_width_k(const HilbertSeries& h);

// deg Q - d, the degree of H as a rational function. Requires Q nonzero.
long deg_series(const HilbertSeries& h);

// Upper bound on delta_d(qt) derived from the degree-one surrogate of qt.
// Requires qt(0) > 0.
unsigned loop_bound(const IntPolynomial& qt, unsigned d);

InvariantReport invariant_report(const HilbertSeries& h);

}  // namespace hilb

#endif
