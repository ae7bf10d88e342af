#ifndef HILB_ORACLE_HPP
#define HILB_ORACLE_HPP

#include "boundary.hpp"

namespace hilb {
namespace oracle {

// Brute-force references for the fast paths in invariants.hpp. They use
// repeated prefix sums (power-series long division by 1-t) instead of
// binomial convolution, on purpose: a shared bug cannot hide behind a
// shared code path.

// Least k <= budget whose unique (0,k) boundary candidate has all
// coefficients nonnegative. Throws BudgetExceeded otherwise.
unsigned brute_hreg(const HilbertSeries& h, unsigned budget);

// The (0,k) candidate found by brute_hreg at the returned k.
BoundaryPresentation brute_hreg_witness(const HilbertSeries& h,
                                        unsigned budget);

// Largest r <= d with (1-t)^r * Q still a nonnegative series over
// (1-t)^d, by explicit multiplication.
unsigned brute_hdepth(const HilbertSeries& h);

// Same contract as invariants::delta_d, via naive long division.
unsigned brute_delta(const IntPolynomial& q, unsigned d);

}  // namespace oracle
}  // namespace hilb

#endif
