// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each criterion is self-contained and prints diagnostic
// detail on failure.
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "errors.hpp"
#include "ingest.hpp"
#include "invariants.hpp"
#include "oracle.hpp"
#include "presentations.hpp"
#include "test_util.hpp"

using namespace hilb;
using testutil::admitted_corpus;
using testutil::ints;
using testutil::poly;

namespace {

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const std::optional<unsigned>& v) {
  return v ? (os << *v) : (os << "none");
}

// Collects failures for one criterion; operator bool reports success.
struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }

  bool ok() const { return failures.empty(); }
};

std::ostream& operator<<(std::ostream& os, const std::vector<Int>& v) {
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << "]";
}

std::string describe(const HilbertSeries& h) {
  return "(" + h.numerator.to_string() + ") / (1-t)^" + std::to_string(h.dim);
}

const HilbertSeries kDeg3Over7{poly({2, -5, 1, 4}), 7};
const HilbertSeries kSyzygy{poly({0, 0, 10, -10, 5, -1}), 5};
const HilbertSeries kGridExample{poly({1, -2, 3, -1}), 3};

// --- criterion 1: deg-3 numerator over 7 variables, end to end ----------

void criterion1(Checker& c) {
  InvariantReport r = invariant_report(kDeg3Over7);
  c.expect_eq(r.delta_d_tilde, 7u, "delta_d of the flipped numerator");
  c.expect_eq(r.hprojdim, 6u, "hprojdim");
  c.expect_eq(r.hdepth, 1u, "hdepth");
  c.expect_eq(r.hreg, 7u, "hreg");

  BoundaryPresentation p = min_height_presentation(kDeg3Over7);
  c.expect_eq(p.n, 1u, "min-height row");
  c.expect_eq(p.k, 7u, "min-height width");
  c.expect_eq(p.f, ints({2, 7, 13, 17, 17, 14, 14}), "min-height f");
  c.expect_eq(p.c, Int(0), "min-height corner");
  c.expect_eq(p.g, ints({2, 5, 6, 3, 0, 14}), "min-height g");
  c.expect(p.is_nonnegative(), "min-height presentation is nonnegative");
  c.expect(reconstruct(p) == canonicalize(kDeg3Over7),
           "min-height presentation reconstructs the series");
}

// --- criterion 2: intermediate expansion prefixes ------------------------

void criterion2(Checker& c) {
  const IntPolynomial q = poly({2, -5, 1, 4});
  const IntPolynomial qt = shift_substitute(q);
  c.expect_eq(qt, poly({2, -9, 13, -4}), "flipped numerator");
  c.expect_eq(expand(qt, 5, 7).coeffs, ints({2, 1, -2, -4, 0, 17, 56}),
              "flipped numerator over (1-t)^5");
  c.expect_eq(expand(qt, 6, 7).coeffs, ints({2, 3, 1, -3, -3, 14, 70}),
              "flipped numerator over (1-t)^6");
  c.expect_eq(expand(qt, 7, 7).coeffs, ints({2, 5, 6, 3, 0, 14, 84}),
              "flipped numerator over (1-t)^7");
  c.expect_eq(expand(q, 5, 7).coeffs, ints({2, 5, 6, 4, 0, -3, 0}),
              "numerator over (1-t)^5");
  c.expect_eq(expand(q, 6, 7).coeffs, ints({2, 7, 13, 17, 17, 14, 14}),
              "numerator over (1-t)^6");
}

// --- criterion 3: small families, regularity and width witnesses --------

void criterion3(Checker& c) {
  {
    HilbertSeries h{poly({1, -1, 0, 1}), 2};
    c.expect_eq(hreg(h), 2u, "hreg of 1-t+t^3 over 2");
    BoundaryPresentation p = min_width_presentation(h);
    c.expect_eq(p.k, 2u, "min width of 1-t+t^3 over 2");
    c.expect_eq(p.f, ints({1, 1}), "f of its width witness");
    c.expect_eq(p.c, Int(0), "corner of its width witness");
    c.expect_eq(p.g, ints({1, 0}), "g of its width witness");
  }
  c.expect_eq(hreg({poly({1, -1, 2, -1}), 2}), 2u,
              "hreg of 1-t+2t^2-t^3 over 2");
  {
    HilbertSeries h{poly({1, -1, 2, -2, 1}), 2};
    c.expect_eq(hreg(h), 2u, "hreg of the quartic over 2");
    c.expect_eq(hreg_width_k(h), std::optional<unsigned>(3),
                "minimal corner-free width of the quartic over 2");
    BoundaryPresentation p = compute_presentation(h, 0, 2);
    c.expect_eq(p.f, ints({1, 1}), "f at (0,2)");
    c.expect_eq(p.c, Int(1), "corner at (0,2)");
    c.expect_eq(p.g, ints({1, 1}), "g at (0,2)");
    c.expect(p.is_nonnegative(), "the (0,2) presentation is nonnegative");
  }
  c.expect_eq(hreg({poly({1, -1, 2, -2, 1}), 4}), 1u,
              "hreg of the quartic over 4");
}

// --- criterion 4: first-syzygy series ------------------------------------

void criterion4(Checker& c) {
  c.expect_eq(hdepth(kSyzygy), 4u, "hdepth");
  c.expect_eq(hreg(kSyzygy), 2u, "hreg");

  PositiveRepresentation rep =
      to_positive_representation(min_width_presentation(kSyzygy));
  PositiveRepresentation want{{{5, 2, 4}, {4, 2, 3}, {3, 2, 2}, {2, 2, 1}}};
  c.expect(rep == want, "min-width decomposition terms");
  c.expect(verify_representation(rep, kSyzygy),
           "min-width decomposition verifies");

  PositiveRepresentation alt{{{4, 2, 10}, {4, 4, 1}, {5, 4, 4}}};
  c.expect(verify_representation(alt, kSyzygy),
           "independently given decomposition verifies");
}

// --- criterion 5: reference boundary grids -------------------------------

void criterion5(Checker& c) {
  BoundaryPresentation p = compute_presentation(kGridExample, 1, 3);
  c.expect_eq(p.f, ints({1, 0, 2}), "(1,3) f");
  c.expect_eq(p.c, Int(0), "(1,3) corner");
  c.expect_eq(p.g, ints({1, 2}), "(1,3) g");
  c.expect_eq(render_grid(p), std::string("   0  1  2  3\n"
                                          "3           1\n"
                                          "2           2\n"
                                          "1  1  0  2  0\n"
                                          "0            \n"),
              "(1,3) grid");

  BoundaryPresentation q = compute_presentation(kGridExample, 0, 0);
  c.expect(q.f.empty(), "(0,0) has no f entries");
  c.expect_eq(q.c, Int(1), "(0,0) corner");
  c.expect_eq(q.g, ints({1, -1, 0}), "(0,0) g");
  c.expect_eq(render_grid(q), std::string("    0\n"
                                          "3   1\n"
                                          "2  -1\n"
                                          "1   0\n"
                                          "0   1\n"),
              "(0,0) grid");
}

// --- criterion 6: property suite over admitted random series -------------

void check_properties(Checker& c, const HilbertSeries& h, std::mt19937_64& rng,
                      bool with_brute) {
  const std::string id = describe(h);
  const IntPolynomial& q = h.numerator;
  long dq = *q.degree();
  unsigned d = h.dim;
  IntPolynomial qt = shift_substitute(q);

  InvariantReport r = invariant_report(h);
  c.expect(r.hdepth + r.hprojdim == r.dim, id + ": hdepth + hprojdim = dim");

  unsigned dd = delta_d(qt, d);
  unsigned budget = static_cast<unsigned>(std::max<long>(dq, dd)) + 8;
  unsigned delta_tilde = delta_budgeted(qt, budget);
  c.expect(r.delta_d_tilde == dd, id + ": reported delta_d");
  c.expect(r.hreg >= delta_tilde, id + ": hreg >= exact delta of flip");
  c.expect(delta_tilde >= dd, id + ": exact delta >= truncated delta");
  c.expect(static_cast<long>(r.hreg) >= dq - static_cast<long>(d),
           id + ": hreg >= deg of the series");
  c.expect(dd <= loop_bound(qt, d), id + ": truncated delta <= loop bound");

  if (with_brute) {
    c.expect(r.hreg == oracle::brute_hreg(h, budget + 8),
             id + ": hreg agrees with brute-force search");
    c.expect(r.hdepth == oracle::brute_hdepth(h),
             id + ": hdepth agrees with brute-force search");
    c.expect(delta_d(q, d) == oracle::brute_delta(q, d),
             id + ": truncated delta agrees with the independent division");
  }

  // short-cut case: regularity ties to the exact delta of the flip
  if (dq <= static_cast<long>(d) || static_cast<long>(dd) >= dq) {
    c.expect(r.hreg == delta_tilde, id + ": short-cut case hreg");
    BoundaryPresentation at_dd = compute_presentation(h, 0, dd);
    if (at_dd.c >= 0)
      c.expect(r.hreg == dd, id + ": short-cut collapses when corner clears");
  }

  // witness bracketing at the computed regularity
  unsigned reg = r.hreg;
  c.expect(compute_presentation(h, 0, reg).is_nonnegative(),
           id + ": width-hreg presentation is nonnegative");
  if (reg > 0) {
    bool tight = false;
    try {
      tight = !compute_presentation(h, 0, reg - 1).is_nonnegative();
    } catch (const NoPresentation&) {
      tight = true;
    }
    c.expect(tight, id + ": width hreg-1 fails");
  }

  // move round trips and uniqueness at a random admissible spot
  {
    std::uniform_int_distribution<unsigned> nd(0, d);
    unsigned n = nd(rng);
    long kmin = std::max<long>(0, dq - (d - n));
    std::uniform_int_distribution<long> kd(kmin, kmin + 3);
    unsigned k = static_cast<unsigned>(kd(rng));
    BoundaryPresentation p = compute_presentation(h, n, k);
    c.expect(reduce_left(expand_right(p)) == p, id + ": right/left round trip");
    if (n > 0)
      c.expect(reduce_up(expand_down(p)) == p, id + ": down/up round trip");
    c.expect(expand_right(p) == compute_presentation(h, n, k + 1),
             id + ": expand_right lands on the direct computation");
    if (n > 0)
      c.expect(expand_down(p) == compute_presentation(h, n - 1, k),
               id + ": expand_down lands on the direct computation");
    c.expect(reconstruct(p) == canonicalize(h), id + ": reconstruction");
  }

  // expansion preserves nonnegativity from the top row
  {
    unsigned k = static_cast<unsigned>(std::max<long>(0, dq));
    BoundaryPresentation p = compute_presentation(h, d, k);
    if (p.is_nonnegative()) {
      c.expect(expand_right(p).is_nonnegative(),
               id + ": expand_right keeps nonnegativity");
      if (d > 0)
        c.expect(expand_down(p).is_nonnegative(),
                 id + ": expand_down keeps nonnegativity");
    }
  }

  // wide-diagonal identity: for k > max(d, deg Q), g_j is a diagonal
  // coefficient of the plain expansion
  {
    unsigned k = static_cast<unsigned>(std::max<long>(d, dq)) + 1;
    BoundaryPresentation p = compute_presentation(h, 0, k);
    for (unsigned j = 0; j < p.g.size(); ++j)
      c.expect(p.g[j] == expand(q, j + 1, k).coeffs[k - 1],
               id + ": wide-diagonal identity at j=" + std::to_string(j));
  }
}

void criterion6(Checker& c) {
  std::mt19937_64 rng(97);
  auto corpus = admitted_corpus(500, 131071);
  for (const auto& h : corpus) check_properties(c, h, rng, true);
  // keep the failure list readable
  if (c.failures.size() > 20) c.failures.resize(20);
}

// --- criterion 7: the tie-break equality never fires ---------------------

void criterion7(Checker& c) {
  for (const auto& h : admitted_corpus(800, 524287)) {
    const IntPolynomial& q = h.numerator;
    unsigned d = h.dim;
    long dq = *q.degree();
    IntPolynomial qt = shift_substitute(q);
    unsigned dd = delta_d(qt, d);
    if (dq <= static_cast<long>(d) || static_cast<long>(dd) >= dq) continue;

    // minimal width at which the row matches the stable diagonal tail
    auto a = expand(q, d, static_cast<size_t>(dq) + 1).coeffs;
    std::vector<Int> b(static_cast<size_t>(dq) + 2);
    for (unsigned i = dd; i <= static_cast<unsigned>(dq) + 1; ++i)
      b[i] = expand(qt, i, d).coeffs[d - 1];
    unsigned k = dd;
    for (; k < static_cast<unsigned>(dq); ++k) {
      bool match = true;
      for (long j = k; j <= dq; ++j)
        if (a[j] != b[j + 1]) { match = false; break; }
      if (match) break;
    }
    if (k > dd && a[k - 1] == b[k]) {
      std::ostringstream os;
      os << "tie-break equality at k=" << k << " for " << describe(h)
         << " (a[k-1]=" << a[k - 1] << ", b[k]=" << b[k] << ")";
      c.failures.push_back(os.str());
    }
  }
}

// --- criterion 8: random monomial ideals ----------------------------------

std::vector<long> standard_monomial_counts(const MonomialIdeal& I,
                                           unsigned maxdeg) {
  std::vector<long> counts(maxdeg + 1, 0);
  std::vector<unsigned> exp(I.nvars, 0);
  for (;;) {
    unsigned total = 0;
    for (unsigned e : exp) total += e;
    if (total <= maxdeg) {
      bool inside = false;
      for (const auto& g : I.gens) {
        bool divides = true;
        for (size_t v = 0; v < g.size(); ++v)
          if (exp[v] < g[v]) { divides = false; break; }
        if (divides) { inside = true; break; }
      }
      if (!inside) ++counts[total];
    }
    size_t pos = 0;
    while (pos < exp.size() && exp[pos] == maxdeg) exp[pos++] = 0;
    if (pos == exp.size()) break;
    ++exp[pos];
  }
  return counts;
}

void criterion8(Checker& c) {
  std::mt19937_64 rng(8191);
  std::uniform_int_distribution<unsigned> nvars_dist(1, 4);
  std::uniform_int_distribution<unsigned> ngens_dist(1, 5);
  std::uniform_int_distribution<unsigned> exp_dist(0, 3);

  unsigned done = 0;
  while (done < 50) {
    unsigned nvars = nvars_dist(rng);
    unsigned ngens = ngens_dist(rng);
    std::ostringstream text;
    bool any = false;
    for (unsigned g = 0; g < ngens; ++g) {
      std::string mono;
      for (unsigned v = 1; v <= nvars; ++v) {
        unsigned e = exp_dist(rng);
        if (!e) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) continue;  // skip the unit monomial
      if (any) text << ", ";
      text << mono;
      any = true;
    }
    if (!any) continue;

    MonomialIdeal I = parse_ideal(text.str(), nvars);
    HilbertSeries h = hilbert_numerator(I);
    const std::string id = "I = (" + text.str() + "), n=" +
                           std::to_string(nvars);

    auto counts = standard_monomial_counts(I, 10);
    auto coeffs = expand(h.numerator, h.dim, 11).coeffs;
    for (size_t n = 0; n <= 10; ++n)
      c.expect(coeffs[n] == counts[n],
               id + ": coefficient " + std::to_string(n) +
                   " matches the monomial count");

    if (!h.numerator.is_zero() && h.dim > 0) check_properties(c, h, rng, true);
    ++done;
  }
  if (c.failures.size() > 20) c.failures.resize(20);
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"deg-3 numerator over 7 variables: invariants and minimal-height "
       "presentation",
       criterion1},
      {"intermediate expansion prefixes along the minimal-height search",
       criterion2},
      {"small families: regularity values and width witnesses", criterion3},
      {"first-syzygy series: depth, regularity, decomposition, verification",
       criterion4},
      {"reference boundary grids at (1,3) and (0,0)", criterion5},
      {"property suite over 500 admitted random series", criterion6},
      {"tie-break coefficient equality never fires at the minimal width",
       criterion7},
      {"random monomial ideals: counts and invariant laws", criterion8},
  };

  bool all_ok = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    std::string verdict;
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("unexpected exception: ") + e.what());
    }
    if (c.ok()) {
      std::cout << "PASS criterion " << (i + 1) << ": " << criteria[i].name
                << "\n";
    } else {
      all_ok = false;
      std::cout << "FAIL criterion " << (i + 1) << ": " << criteria[i].name
                << "\n";
      for (const auto& f : c.failures) std::cout << "       " << f << "\n";
    }
  }
  return all_ok ? 0 : 1;
}
