#include "boundary.hpp"

#include <sstream>

#include "errors.hpp"

namespace hilb {

bool BoundaryPresentation::is_nonnegative() const {
  if (c < 0) return false;
  for (const Int& v : f)
    if (v < 0) return false;
  for (const Int& v : g)
    if (v < 0) return false;
  return true;
}

BoundaryPresentation compute_presentation(const HilbertSeries& h, unsigned n, unsigned k) {
  if (n > h.dim) throw PreconditionError("row index n exceeds d");
  const unsigned d = h.dim;
  const auto deg = h.numerator.degree();
  if (deg && *deg - static_cast<long>(d - n) > static_cast<long>(k))
    throw NoPresentation("no (" + std::to_string(n) + "," + std::to_string(k) +
                         ")-boundary presentation: k < deg Q - (d-n)");

  const auto a = expand(h.numerator, d - n, k + 1).coeffs;
  const auto b = expand(shift_substitute(h.numerator), k, d - n + 1).coeffs;

  BoundaryPresentation p;
  p.d = d;
  p.n = n;
  p.k = k;
  p.f.assign(a.begin(), a.begin() + k);
  p.g.assign(b.begin(), b.begin() + (d - n));
  Int gsum = 0;
  for (const Int& v : p.g) gsum += v;
  p.c = a[k] - gsum;
  Int fsum = 0;
  for (const Int& v : p.f) fsum += v;
  if (p.c != b[d - n] - fsum)
    throw NoPresentation("corner cross-check failed: no such boundary presentation");
  if (canonicalize(reconstruct(p)) != canonicalize(h))
    throw NoPresentation("reconstruction mismatch: no such boundary presentation");
  return p;
}

HilbertSeries reconstruct(const BoundaryPresentation& p) {
  // Over the common denominator (1-t)^d:
  //   f_i t^i (1-t)^{d-n} + c t^k (1-t)^{d-n} + g_j t^k (1-t)^j
  IntPolynomial row;
  {
    std::vector<Int> coeffs(p.k + 1, Int(0));
    for (unsigned i = 0; i < p.k; ++i) coeffs[i] = p.f[i];
    coeffs[p.k] = p.c;
    row = IntPolynomial(std::move(coeffs));
  }
  IntPolynomial num = row.times_one_minus_t(p.d - p.n);
  for (unsigned j = 0; j < p.g.size(); ++j) {
    std::vector<Int> mono(p.k + 1, Int(0));
    mono[p.k] = p.g[j];
    num = num + IntPolynomial(std::move(mono)).times_one_minus_t(j);
  }
  return canonicalize({num, p.d});
}

BoundaryPresentation expand_right(const BoundaryPresentation& p) {
  BoundaryPresentation r;
  r.d = p.d;
  r.n = p.n;
  r.k = p.k + 1;
  r.f = p.f;
  Int gsum = 0;
  for (const Int& v : p.g) gsum += v;
  r.f.push_back(p.c + gsum);
  r.c = 0;
  r.g.resize(p.g.size());
  Int run = 0;
  for (std::size_t j = 0; j < p.g.size(); ++j) {
    run += p.g[j];
    r.g[j] = run;
  }
  return r;
}

BoundaryPresentation expand_down(const BoundaryPresentation& p) {
  if (p.n == 0) throw InvalidMove("cannot expand below row 0");
  BoundaryPresentation r;
  r.d = p.d;
  r.n = p.n - 1;
  r.k = p.k;
  r.f.resize(p.f.size());
  Int run = 0;
  for (std::size_t i = 0; i < p.f.size(); ++i) {
    run += p.f[i];
    r.f[i] = run;
  }
  r.c = 0;
  r.g = p.g;
  Int fsum = 0;
  for (const Int& v : p.f) fsum += v;
  r.g.push_back(p.c + fsum);
  return r;
}

BoundaryPresentation reduce_left(const BoundaryPresentation& p) {
  if (!p.is_corner_free())
    throw InvalidMove("reduce_left requires a corner-free presentation");
  if (p.k == 0) throw InvalidMove("cannot reduce width below 0");
  BoundaryPresentation r;
  r.d = p.d;
  r.n = p.n;
  r.k = p.k - 1;
  r.f.assign(p.f.begin(), p.f.end() - 1);
  r.c = p.f[p.k - 1] - (p.g.empty() ? Int(0) : p.g.back());
  r.g.resize(p.g.size());
  if (!p.g.empty()) {
    r.g[0] = p.g[0];
    for (std::size_t j = 1; j < p.g.size(); ++j) r.g[j] = p.g[j] - p.g[j - 1];
  }
  return r;
}

BoundaryPresentation reduce_up(const BoundaryPresentation& p) {
  if (!p.is_corner_free())
    throw InvalidMove("reduce_up requires a corner-free presentation");
  if (p.n == p.d) throw InvalidMove("cannot reduce height above row d");
  BoundaryPresentation r;
  r.d = p.d;
  r.n = p.n + 1;
  r.k = p.k;
  r.f.resize(p.f.size());
  if (!p.f.empty()) {
    r.f[0] = p.f[0];
    for (std::size_t i = 1; i < p.f.size(); ++i) r.f[i] = p.f[i] - p.f[i - 1];
  }
  r.c = p.g.back() - (p.f.empty() ? Int(0) : p.f[p.k - 1]);
  r.g.assign(p.g.begin(), p.g.end() - 1);
  return r;
}

bool can_reduce_width(const BoundaryPresentation& p) {
  if (!p.is_nonnegative())
    throw PreconditionError("can_reduce_width requires a nonnegative presentation");
  if (p.c != 0) return false;
  if (p.k == 0) return false;
  if (!p.g.empty() && p.f[p.k - 1] < p.g.back()) return false;
  for (std::size_t j = 0; j + 1 < p.g.size(); ++j)
    if (p.g[j + 1] < p.g[j]) return false;
  return true;
}

std::string render_grid(const BoundaryPresentation& p) {
  const unsigned rows = p.d + 1;
  const unsigned cols = p.k + 1;
  std::vector<std::vector<std::string>> cell(rows, std::vector<std::string>(cols));
  auto put = [&](unsigned row, unsigned col, const Int& v) {
    cell[row][col] = v.get_str();
  };
  for (unsigned i = 0; i < p.k; ++i) put(p.n, i, p.f[i]);
  put(p.n, p.k, p.c);
  for (unsigned j = 0; j < p.g.size(); ++j) put(p.d - j, p.k, p.g[j]);

  std::size_t w = 1;
  for (const auto& row : cell)
    for (const auto& s : row) w = std::max(w, s.size());
  for (unsigned col = 0; col < cols; ++col) w = std::max(w, std::to_string(col).size());
  const std::size_t lw = std::to_string(p.d).size();

  std::ostringstream os;
  os << std::string(lw, ' ');
  for (unsigned col = 0; col < cols; ++col) {
    std::string label = std::to_string(col);
    os << "  " << std::string(w - label.size(), ' ') << label;
  }
  os << '\n';
  for (unsigned r = 0; r < rows; ++r) {
    unsigned row = p.d - r;  // top row is exponent d
    std::string label = std::to_string(row);
    os << std::string(lw - label.size(), ' ') << label;
    for (unsigned col = 0; col < cols; ++col) {
      const std::string& s = cell[row][col];
      os << "  " << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hilb
