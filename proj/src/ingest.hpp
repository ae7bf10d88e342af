#ifndef HILB_INGEST_HPP
#define HILB_INGEST_HPP

#include <string>
#include <vector>

#include "series.hpp"

namespace hilb {

// Monomial ideal in x1..xn, generators as exponent vectors, kept minimal
// (no generator divides another componentwise).
struct MonomialIdeal {
  unsigned nvars = 1;
  std::vector<std::vector<unsigned>> gens;
};

// Grammar: comma-separated generators, each a `*`-joined product of
// `x<i>` or `x<i>^e` factors. Variables indexed 1..nvars.
MonomialIdeal parse_ideal(const std::string& text, unsigned nvars);

// Numerator of the Hilbert series of K[x1..xn]/I over (1-t)^nvars by
// inclusion-exclusion over generator subsets, canonicalized. Capped at
// 20 generators.
HilbertSeries hilbert_numerator(const MonomialIdeal& ideal);

struct BatchEntry {
  size_t line = 0;          // 1-based line number in the file
  bool ok = false;
  HilbertSeries series;     // valid when ok
  std::string error;        // message when !ok
};

// JSON lines {"numerator": "<poly>"|[ints], "dim": n}; blank lines are
// skipped. Bad lines become error entries, good lines are canonicalized
// and validated as nonnegative series.
std::vector<BatchEntry> read_batch(const std::string& path);

}  // namespace hilb

#endif
