#include "oracle.hpp"

#include <algorithm>

#include "errors.hpp"
#include "series.hpp"

namespace hilb {
namespace oracle {

namespace {

// First n coefficients of q/(1-t)^k by k rounds of long division:
// dividing by (1-t) leaves running prefix sums.
std::vector<Int> divide_pow(const IntPolynomial& q, unsigned k, size_t n) {
  std::vector<Int> a(n, 0);
  const auto& c = q.coeffs();
  for (size_t i = 0; i < n && i < c.size(); ++i) a[i] = c[i];
  for (unsigned r = 0; r < k; ++r)
    for (size_t i = 1; i < n; ++i) a[i] += a[i - 1];
  return a;
}

// The unique (0,k) boundary candidate solved directly from the two
// expansions; nullopt when the corner is over-determined inconsistently
// (no presentation of that width exists).
std::optional<BoundaryPresentation> candidate(const HilbertSeries& h,
                                              unsigned k) {
  const IntPolynomial& q = h.numerator;
  unsigned d = h.dim;
  std::vector<Int> a = divide_pow(q, d, static_cast<size_t>(k) + 1);
  IntPolynomial qt = shift_substitute(q);
  std::vector<Int> b = divide_pow(qt, k, static_cast<size_t>(d) + 1);
  BoundaryPresentation p;
  p.d = d;
  p.n = 0;
  p.k = k;
  p.f.assign(a.begin(), a.begin() + k);
  p.g.assign(b.begin(), b.begin() + d);
  Int sum_g = 0;
  for (const auto& x : p.g) sum_g += x;
  p.c = a[k] - sum_g;
  Int sum_f = 0;
  for (const auto& x : p.f) sum_f += x;
  if (p.c != b[d] - sum_f) return std::nullopt;
  return p;
}

}  // namespace

BoundaryPresentation brute_hreg_witness(const HilbertSeries& h,
                                        unsigned budget) {
  long dq = h.numerator.is_zero() ? 0 : *h.numerator.degree();
  unsigned k0 = dq > static_cast<long>(h.dim)
                    ? static_cast<unsigned>(dq - h.dim)
                    : 0;
  for (unsigned k = k0; k <= budget; ++k) {
    auto p = candidate(h, k);
    if (p && p->is_nonnegative()) return *p;
  }
  throw BudgetExceeded(budget);
}

unsigned brute_hreg(const HilbertSeries& h, unsigned budget) {
  return brute_hreg_witness(h, budget).k;
}

unsigned brute_hdepth(const HilbertSeries& h) {
  unsigned best = 0;
  for (unsigned r = 0; r <= h.dim; ++r) {
    IntPolynomial p = h.numerator.times_one_minus_t(r);
    if (is_nonnegative_series({p, h.dim})) best = r;
  }
  return best;
}

unsigned brute_delta(const IntPolynomial& q, unsigned d) {
  if (q.is_zero() || d == 0) return 0;
  if (q.lowest_nonvanishing() < 0) throw InfiniteDelta();
  for (unsigned k = 0;; ++k) {
    std::vector<Int> a = divide_pow(q, k, d);
    if (std::all_of(a.begin(), a.end(), [](const Int& x) { return x >= 0; }))
      return k;
  }
}

}  // namespace oracle
}  // namespace hilb
