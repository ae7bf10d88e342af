#include "polynomial.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace hilb {

namespace {

void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

IntPolynomial IntPolynomial::from_ints(const std::vector<long>& coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

std::optional<long> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<long>(coeffs_.size()) - 1;
}

const Int& IntPolynomial::coeff(std::size_t i) const {
  static const Int zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Int IntPolynomial::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

Int IntPolynomial::lowest_nonvanishing() const {
  for (const Int& c : coeffs_)
    if (c != 0) return c;
  return 0;
}

bool IntPolynomial::is_nonnegative() const {
  for (const Int& c : coeffs_)
    if (c < 0) return false;
  return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Int> r(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) r[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Int> r(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) r[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<Int> r(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
  std::vector<Int> r = coeffs_;
  for (Int& v : r) v *= c;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted(unsigned e) const {
  if (coeffs_.empty() || e == 0) return *this;
  std::vector<Int> r(coeffs_.size() + e, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + e] = coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::times_one_minus_t(unsigned e) const {
  IntPolynomial r = *this;
  const IntPolynomial f = IntPolynomial::from_ints({1, -1});
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

IntPolynomial IntPolynomial::divide_one_minus_t() const {
  if (coeffs_.empty()) return {};
  if (eval_at_one() != 0)
    throw PreconditionError("polynomial is not divisible by (1-t)");
  // Q = (1-t) * S  =>  S_i = sum_{j<=i} Q_j
  std::vector<Int> s(coeffs_.size() - 1, 0);
  Int run = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    run += coeffs_[i];
    s[i] = run;
  }
  return IntPolynomial(std::move(s));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw SyntaxError("expected integer", start);
    return Int(s.substr(start, pos - start));
  }

  unsigned long parse_exponent() {
    skip_ws();
    std::size_t start = pos;
    Int e = parse_int();
    if (e < 0) throw SyntaxError("negative exponent", start);
    if (!e.fits_ulong_p()) throw SyntaxError("exponent too large", start);
    return e.get_ui();
  }

  // coefficient-list form: [c0, c1, ...]
  IntPolynomial parse_list() {
    ++pos;  // '['
    std::vector<Int> coeffs;
    skip_ws();
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
    } else {
      for (;;) {
        coeffs.push_back(parse_int());
        skip_ws();
        if (pos >= s.size()) throw SyntaxError("unterminated coefficient list", pos);
        if (s[pos] == ',') {
          ++pos;
          continue;
        }
        if (s[pos] == ']') {
          ++pos;
          break;
        }
        throw SyntaxError("expected ',' or ']'", pos);
      }
    }
    if (!eof()) throw SyntaxError("trailing input after coefficient list", pos);
    return IntPolynomial(std::move(coeffs));
  }

  // one term: c, c*t^e, ct^e, t^e, t (sign handled by caller)
  void parse_term(std::vector<Int>& acc, bool negative) {
    skip_ws();
    Int coeff = 1;
    bool saw_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = parse_int();
      saw_coeff = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos >= s.size() || s[pos] != 't') throw SyntaxError("expected 't' after '*'", pos);
      }
    }
    unsigned long exp = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exp = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exp = parse_exponent();
      }
    } else if (!saw_coeff) {
      throw SyntaxError("expected term", pos);
    }
    if (negative) coeff = -coeff;
    if (acc.size() <= exp) acc.resize(exp + 1, 0);
    acc[exp] += coeff;
  }

  IntPolynomial parse() {
    skip_ws();
    if (pos < s.size() && s[pos] == '[') return parse_list();
    std::vector<Int> acc;
    bool negative = false;
    skip_ws();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative = s[pos] == '-';
      ++pos;
    }
    parse_term(acc, negative);
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') throw SyntaxError("expected '+' or '-'", pos);
      ++pos;
      parse_term(acc, c == '-');
    }
    return IntPolynomial(std::move(acc));
  }
};

}  // namespace

IntPolynomial parse_poly(const std::string& text) { return Parser(text).parse(); }

IntPolynomial shift_substitute(const IntPolynomial& q) {
  // Horner at (1-t): r = r*(1-t) + c, highest coefficient first.
  IntPolynomial r;
  const auto& c = q.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = r.times_one_minus_t();
    r = r + IntPolynomial(std::vector<Int>{*it});
  }
  return r;
}

}  // namespace hilb
