#ifndef HILB_POLYNOMIAL_HPP
#define HILB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hilb {

using Int = mpz_class;

// Univariate polynomial over Z, dense ascending-degree coefficients.
// Canonical form: trailing zeros trimmed; the zero polynomial is the empty
// sequence and has no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial from_ints(const std::vector<long>& coeffs);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Degree, or nullopt for the zero polynomial. All degree comparisons in
  // the library treat "no degree" as smaller than every integer.
  std::optional<long> degree() const;

  const Int& coeff(std::size_t i) const;  // 0 beyond the stored range
  Int eval_at_one() const;
  Int lowest_nonvanishing() const;  // 0 for the zero polynomial

  bool is_nonnegative() const;  // every coefficient >= 0

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial scaled(const Int& c) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  // p * t^e
  IntPolynomial shifted(unsigned e) const;
  // p * (1-t)^e
  IntPolynomial times_one_minus_t(unsigned e = 1) const;
  // Exact division by (1-t); requires p(1) == 0.
  IntPolynomial divide_one_minus_t() const;

  std::string to_string() const;  // c*t^e form, ascending degrees

 private:
  std::vector<Int> coeffs_;
};

// Parse the polynomial grammar (signed `c`, `c*t^e`, `ct^e`, `t^e`, `t`
// terms joined by +/-) or the bracketed coefficient list `[c0,c1,...]`.
// Throws SyntaxError with the offending position.
IntPolynomial parse_poly(const std::string& text);

// Q(1-t), computed exactly; a degree-preserving involution.
IntPolynomial shift_substitute(const IntPolynomial& q);

}  // namespace hilb

#endif
