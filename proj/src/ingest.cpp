#include "ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "errors.hpp"

namespace hilb {

namespace {

constexpr size_t kMaxGenerators = 20;

bool divides(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void minimalize(std::vector<std::vector<unsigned>>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<unsigned>> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(gens.begin(), gens.end(), [&](const auto& h) {
      return h != g && divides(h, g);
    });
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, unsigned nvars) {
  if (nvars == 0) throw PreconditionError("nvars must be at least 1");
  MonomialIdeal ideal;
  ideal.nvars = nvars;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint = [&]() -> unsigned long {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected number", start);
    return std::stoul(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos >= text.size()) return ideal;  // empty generator list
  for (;;) {
    std::vector<unsigned> exp(nvars, 0);
    for (;;) {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'x')
        throw SyntaxError("expected variable 'x<i>'", pos);
      ++pos;
      size_t vpos = pos;
      unsigned long idx = parse_uint();
      if (idx < 1 || idx > nvars)
        throw SyntaxError("variable index out of range", vpos);
      unsigned long e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        e = parse_uint();
      }
      exp[idx - 1] += static_cast<unsigned>(e);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    ideal.gens.push_back(std::move(exp));
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != ',') throw SyntaxError("expected ',' or '*'", pos);
    ++pos;
  }
  minimalize(ideal.gens);
  if (ideal.gens.size() > kMaxGenerators)
    throw TooManyGenerators(ideal.gens.size(), kMaxGenerators);
  return ideal;
}

HilbertSeries hilbert_numerator(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens;
  if (gens.size() > kMaxGenerators)
    throw TooManyGenerators(gens.size(), kMaxGenerators);
  std::vector<Int> coeffs{1};
  std::vector<unsigned> lcm(ideal.nvars);
  for (size_t mask = 1; mask < (size_t(1) << gens.size()); ++mask) {
    std::fill(lcm.begin(), lcm.end(), 0u);
    unsigned bits = 0;
    for (size_t i = 0; i < gens.size(); ++i)
      if (mask & (size_t(1) << i)) {
        ++bits;
        for (size_t v = 0; v < ideal.nvars; ++v)
          lcm[v] = std::max(lcm[v], gens[i][v]);
      }
    size_t deg = 0;
    for (unsigned e : lcm) deg += e;
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] += (bits % 2 ? -1 : 1);
  }
  return canonicalize({IntPolynomial(std::move(coeffs)), ideal.nvars});
}

std::vector<BatchEntry> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<BatchEntry> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BatchEntry entry;
    entry.line = lineno;
    try {
      auto j = nlohmann::json::parse(line);
      if (!j.is_object() || !j.contains("numerator") || !j.contains("dim"))
        throw SyntaxError("expected {\"numerator\":..., \"dim\":...}", 0);
      IntPolynomial q;
      const auto& num = j["numerator"];
      if (num.is_string()) {
        q = parse_poly(num.get<std::string>());
      } else if (num.is_array()) {
        std::vector<Int> c;
        for (const auto& v : num) {
          if (!v.is_number_integer())
            throw SyntaxError("coefficient list must hold integers", 0);
          c.emplace_back(static_cast<long>(v.get<long long>()));
        }
        q = IntPolynomial(std::move(c));
      } else {
        throw SyntaxError("numerator must be a string or an array", 0);
      }
      if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw SyntaxError("dim must be a nonnegative integer", 0);
      HilbertSeries h =
          canonicalize({q, static_cast<unsigned>(j["dim"].get<long long>())});
      require_nonnegative(h);
      entry.ok = true;
      entry.series = h;
    } catch (const nlohmann::json::exception& e) {
      entry.error = std::string("invalid JSON: ") + e.what();
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace hilb
