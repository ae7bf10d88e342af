#include "series.hpp"

#include "errors.hpp"

namespace hilb {

SeriesPrefix expand(const IntPolynomial& q, unsigned k, std::size_t n) {
  SeriesPrefix out;
  out.denom_exp = k;
  out.coeffs.assign(n, Int(0));
  if (n == 0 || q.is_zero()) return out;
  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = q.coeff(i);
    return out;
  }
  // binom[m] = C(m+k-1, k-1), built by the recurrence
  // binom[m] = binom[m-1] * (m+k-1) / m (exact at every step).
  std::vector<Int> binom(n);
  binom[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    binom[m] = binom[m - 1] * Int(m + k - 1);
    mpz_divexact_ui(binom[m].get_mpz_t(), binom[m].get_mpz_t(), static_cast<unsigned long>(m));
  }
  const auto& qc = q.coeffs();
  for (std::size_t i = 0; i < qc.size() && i < n; ++i) {
    if (qc[i] == 0) continue;
    for (std::size_t m = i; m < n; ++m) out.coeffs[m] += qc[i] * binom[m - i];
  }
  return out;
}

HilbertSeries canonicalize(const HilbertSeries& h) {
  HilbertSeries r = h;
  if (r.numerator.is_zero()) return {IntPolynomial{}, 0};
  while (r.dim > 0 && r.numerator.eval_at_one() == 0) {
    r.numerator = r.numerator.divide_one_minus_t();
    --r.dim;
    if (r.numerator.is_zero()) return {IntPolynomial{}, 0};
  }
  return r;
}

bool is_nonnegative_series(const HilbertSeries& h) {
  const HilbertSeries c = canonicalize(h);
  const IntPolynomial& q = c.numerator;
  const unsigned d = c.dim;
  if (q.is_zero()) return true;
  if (d == 0) return q.is_nonnegative();
  if (q.eval_at_one() < 0) return false;  // coefficients ~ Q(1) n^{d-1} eventually
  const std::size_t dq = static_cast<std::size_t>(*q.degree());

  // Beyond deg Q the level-1 coefficients are the constant Q(1) >= 0, so the
  // level-2 tail is nondecreasing there, and inductively level j is
  // nondecreasing beyond the point m where the level-(j-1) tail has become
  // nonnegative. Walk each level forward to its first nonnegative tail entry;
  // coefficients tend to +infinity (Q(1) >= 1), so each walk terminates.
  std::size_t m = dq;
  std::size_t len = dq + 1;
  std::vector<Int> level = expand(q, d, len).coeffs;
  if (d >= 2) {
    for (unsigned j = 2; j <= d; ++j) {
      std::vector<Int> lv = expand(q, j, std::max(len, m + 1)).coeffs;
      std::size_t n = m;
      while (true) {
        if (n >= lv.size()) lv = expand(q, j, 2 * lv.size()).coeffs;
        if (lv[n] >= 0) break;
        ++n;
      }
      m = n;
      if (j == d) {
        len = m + 1;
        level = expand(q, d, len).coeffs;
      }
    }
  }
  for (std::size_t i = 0; i <= m; ++i)
    if (level[i] < 0) return false;
  return true;
}

void require_nonnegative(const HilbertSeries& h) {
  if (!is_nonnegative_series(h))
    throw NotNonnegative("series " + h.numerator.to_string() + " / (1-t)^" +
                         std::to_string(h.dim) + " has a negative coefficient");
}

}  // namespace hilb
