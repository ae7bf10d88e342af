#ifndef HILB_PRESENTATIONS_HPP
#define HILB_PRESENTATIONS_HPP

#include <vector>

#include "boundary.hpp"

namespace hilb {

// A finite sum of terms a * t^j / (1-t)^i with a >= 0, kept sorted by
// denominator exponent descending, then shift ascending.
struct PositiveTerm {
  unsigned denom_exp = 0;  // i
  unsigned shift = 0;      // j
  Int coeff;               // a
  bool operator==(const PositiveTerm&) const = default;
};

struct PositiveRepresentation {
  std::vector<PositiveTerm> terms;
  bool operator==(const PositiveRepresentation&) const = default;
};

// Nonnegative (0, Hreg H)-boundary presentation: the numerator row of
// minimal width. Requires H canonicalized and nonnegative.
BoundaryPresentation min_width_presentation(const HilbertSeries& h);

// Nonnegative (Hdepth H, k)-boundary presentation of minimal height,
// with k = max{delta_d(Qt), deg Q + 1}. Requires H canonicalized and
// nonnegative.
BoundaryPresentation min_height_presentation(const HilbertSeries& h);

// Flatten a nonnegative presentation into sorted positive terms,
// dropping zero coefficients. Throws PreconditionError on a negative
// presentation.
PositiveRepresentation to_positive_representation(
    const BoundaryPresentation& p);

// True when the terms sum back to H exactly.
bool verify_representation(const PositiveRepresentation& rep,
                           const HilbertSeries& h);

}  // namespace hilb

#endif
