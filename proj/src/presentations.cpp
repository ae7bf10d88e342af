#include "presentations.hpp"

#include <algorithm>

#include "errors.hpp"
#include "invariants.hpp"

namespace hilb {

BoundaryPresentation min_width_presentation(const HilbertSeries& h) {
  require_nonnegative(h);
  return compute_presentation(h, 0, hreg(h));
}

BoundaryPresentation min_height_presentation(const HilbertSeries& h) {
  require_nonnegative(h);
  IntPolynomial qt = shift_substitute(h.numerator);
  long dq = h.numerator.is_zero() ? -1 : *h.numerator.degree();
  unsigned e = std::max<long>(delta_d(qt, h.dim), dq + 1);
  return compute_presentation(h, hdepth(h), e);
}

PositiveRepresentation to_positive_representation(
    const BoundaryPresentation& p) {
  if (!p.is_nonnegative())
    throw PreconditionError("presentation has a negative coefficient");
  PositiveRepresentation rep;
  for (unsigned i = 0; i < p.k; ++i)
    if (p.f[i] > 0) rep.terms.push_back({p.n, i, p.f[i]});
  if (p.c > 0) rep.terms.push_back({p.n, p.k, p.c});
  for (unsigned j = 0; j < p.g.size(); ++j)
    if (p.g[j] > 0) rep.terms.push_back({p.d - j, p.k, p.g[j]});
  std::sort(rep.terms.begin(), rep.terms.end(),
            [](const PositiveTerm& x, const PositiveTerm& y) {
              if (x.denom_exp != y.denom_exp) return x.denom_exp > y.denom_exp;
              return x.shift < y.shift;
            });
  return rep;
}

bool verify_representation(const PositiveRepresentation& rep,
                           const HilbertSeries& h) {
  // Sum the terms over the common denominator (1-t)^D with
  // D = max denominator exponent, then compare canonical forms.
  unsigned maxexp = h.dim;
  for (const auto& t : rep.terms) maxexp = std::max(maxexp, t.denom_exp);
  IntPolynomial sum;
  for (const auto& t : rep.terms) {
    IntPolynomial term({t.coeff});
    sum = sum + term.times_one_minus_t(maxexp - t.denom_exp).shifted(t.shift);
  }
  HilbertSeries lhs = canonicalize({sum, maxexp});
  HilbertSeries rhs = canonicalize(h);
  return lhs == rhs;
}

}  // namespace hilb
