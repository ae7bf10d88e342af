#include "invariants.hpp"

#include <algorithm>

#include "boundary.hpp"
#include "errors.hpp"

namespace hilb {

unsigned delta_d(const IntPolynomial& q, unsigned d) {
  if (q.is_zero() || d == 0) return 0;
  if (q.lowest_nonvanishing() < 0) throw InfiniteDelta();
  // Full re-expansion per step; the prefix-sum shortcut lives in the
  // oracle as the independent implementation.
  for (unsigned k = 0;; ++k) {
    const auto a = expand(q, k, d).coeffs;
    if (std::all_of(a.begin(), a.end(), [](const Int& x) { return x >= 0; }))
      return k;
  }
}

unsigned delta_budgeted(const IntPolynomial& q, unsigned budget) {
  if (q.is_zero()) return 0;
  if (q.lowest_nonvanishing() < 0) throw InfiniteDelta();
  for (unsigned k = 0; k <= budget; ++k)
    if (is_nonnegative_series({q, k})) return k;
  throw BudgetExceeded(budget);
}

unsigned hprojdim(const HilbertSeries& h) {
  if (h.numerator.is_zero()) return 0;
  IntPolynomial qt = shift_substitute(h.numerator);
  long dq = *h.numerator.degree();
  unsigned e = std::max<long>(delta_d(qt, h.dim), dq + 1);
  return delta_d(h.numerator, e);
}

unsigned hdepth(const HilbertSeries& h) { return h.dim - hprojdim(h); }

namespace {

// Regularity together with the width of the minimal nonnegative
// corner-free presentation (nullopt when no cancellation step applies).
std::pair<unsigned, std::optional<unsigned>> hreg_impl(
    const HilbertSeries& h) {
  const IntPolynomial& q = h.numerator;
  unsigned d = h.dim;
  if (q.is_zero()) return {0, std::nullopt};
  long dq = *q.degree();
  if (d == 0) return {static_cast<unsigned>(dq), std::nullopt};
  IntPolynomial qt = shift_substitute(q);
  unsigned dd = delta_d(qt, d);
  if (dq <= static_cast<long>(d) || static_cast<long>(dd) >= dq) {
    // The corner of the width-dd boundary can still be negative; step
    // right until it clears (it vanishes once k exceeds deg Q).
    unsigned k = dd;
    for (;;) {
      BoundaryPresentation p = compute_presentation(h, 0, k);
      if (p.c >= 0) return {k, std::nullopt};
      ++k;
    }
  }
  SeriesPrefix ap = expand(q, d, static_cast<size_t>(dq) + 1);
  const auto& a = ap.coeffs;
  // b[i] = coefficient d-1 of Qt/(1-t)^i
  std::vector<Int> b(static_cast<size_t>(dq) + 2);
  for (unsigned i = dd; i <= static_cast<unsigned>(dq) + 1; ++i)
    b[i] = expand(qt, i, d).coeffs[d - 1];
  unsigned k = dd;
  for (; k < static_cast<unsigned>(dq); ++k) {
    bool ok = true;
    for (long j = k; j <= dq; ++j)
      if (a[j] != b[j + 1]) { ok = false; break; }
    if (ok) break;
  }
  if (k > dd && a[k - 1] >= b[k]) return {k - 1, k};
  return {k, k};
}

}  // namespace

unsigned hreg(const HilbertSeries& h) { return hreg_impl(h).first; }

std::optional<unsigned> hreg_width_k(const HilbertSeries& h) {
  return hreg_impl(h).second;
}

long deg_series(const HilbertSeries& h) {
  if (h.numerator.is_zero())
    throw PreconditionError("degree of the zero series is undefined");
  return *h.numerator.degree() - static_cast<long>(h.dim);
}

unsigned loop_bound(const IntPolynomial& qt, unsigned d) {
  std::vector<Int> v = qt.coeffs();
  if (v.empty() || v[0] <= 0)
    throw PreconditionError("loop_bound requires a positive constant term");
  while (v.size() > 2) {
    size_t m = v.size() - 1;
    if (v[m] < 0) v[m - 1] += v[m];  // min(h, h + top)
    v.resize(m);
    while (v.size() > 2 && v.back() == 0) v.pop_back();
  }
  Int q0 = v[0];
  Int r = v.size() > 1 ? v[1] : Int(0);
  if (q0 + r >= 0) return 1;
  Int num = q0 - Int(d - 1) * (q0 + r);
  Int bound;
  mpz_cdiv_q(bound.get_mpz_t(), num.get_mpz_t(), q0.get_mpz_t());
  if (bound < 1) bound = 1;
  return static_cast<unsigned>(bound.get_ui());
}

InvariantReport invariant_report(const HilbertSeries& input) {
  HilbertSeries h = canonicalize(input);
  require_nonnegative(h);
  InvariantReport r;
  r.dim = h.dim;
  r.numerator = h.numerator;
  r.hprojdim = hprojdim(h);
  r.hdepth = h.dim - r.hprojdim;
  auto [reg, wk] = hreg_impl(h);
  r.hreg = reg;
  r.width_k = wk;
  r.delta_d_tilde = delta_d(shift_substitute(h.numerator), h.dim);
  if (!h.numerator.is_zero()) {
    r.deg_numerator = *h.numerator.degree();
    r.deg_series = deg_series(h);
  }
  return r;
}

}  // namespace hilb
