#ifndef HILB_BOUNDARY_HPP
#define HILB_BOUNDARY_HPP

#include "series.hpp"

namespace hilb {

// An (n,k)-boundary presentation of Q(t)/(1-t)^d:
//
//   H = sum_{i<k} f_i t^i/(1-t)^n  +  c t^k/(1-t)^n
//     + sum_{j<d-n} g_j t^k/(1-t)^{d-j}
//
// The nonzero cells occupy the bottom row n and right column k of a grid
// rectangle whose lower right corner holds c.
struct BoundaryPresentation {
  unsigned d = 0;
  unsigned n = 0;
  unsigned k = 0;
  std::vector<Int> f;  // size k
  Int c = 0;
  std::vector<Int> g;  // size d-n

  bool is_corner_free() const { return c == 0; }
  bool is_nonnegative() const;
  bool operator==(const BoundaryPresentation& rhs) const = default;
};

// The unique (n,k)-boundary presentation of H.
// Throws NoPresentation when none exists (k < deg Q - (d-n)).
BoundaryPresentation compute_presentation(const HilbertSeries& h, unsigned n, unsigned k);

// The series the presentation sums to, over the common denominator (1-t)^d,
// returned canonicalized.
HilbertSeries reconstruct(const BoundaryPresentation& p);

// Corner-free (n,k+1) presentation of the same series.
BoundaryPresentation expand_right(const BoundaryPresentation& p);
// Corner-free (n-1,k) presentation; throws InvalidMove at n=0.
BoundaryPresentation expand_down(const BoundaryPresentation& p);
// (n,k-1) presentation; requires corner-free input and k>0.
BoundaryPresentation reduce_left(const BoundaryPresentation& p);
// (n+1,k) presentation; requires corner-free input and n<d.
BoundaryPresentation reduce_up(const BoundaryPresentation& p);

// For a nonnegative presentation: Hreg <= k-1 iff the presentation is
// corner-free, f_{k-1} >= g_{d-n-1}, and g is nondecreasing.
bool can_reduce_width(const BoundaryPresentation& p);

// ASCII grid: rows labeled d down to 0 (denominator exponent), columns
// 0..k; boundary cells show explicit integers, off-boundary cells blank.
std::string render_grid(const BoundaryPresentation& p);

}  // namespace hilb

#endif
