#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alliance {

// Dense univariate polynomial with arbitrary-precision non-negative integer
// coefficients, indexed by exponent. The zero polynomial has no terms and
// degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  // coeffs[k] is the coefficient of x^k. Throws std::invalid_argument if any
  // entry is negative. Trailing zeros are trimmed.
  explicit Polynomial(std::vector<mpz_class> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return monomial(1, 0); }
  static Polynomial monomial(mpz_class c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^k; zero outside the stored range.
  const mpz_class& coeff(int k) const;
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Sum of all coefficients, i.e. p(1).
mpz_class evaluate_at_one(const Polynomial& p);

// Smallest exponent with a nonzero coefficient. Throws std::invalid_argument
// on the zero polynomial.
int min_support(const Polynomial& p);

// Canonical text form: terms in descending exponent joined by " + ", unit
// coefficients elided except on x^0, exponent suffix elided for x^1 and x^0.
// Examples: "x^4 + 4x^3 + 4x^2", "3x", "1". The zero polynomial prints "0".
std::string format_poly(const Polynomial& p);

// Inverse of format_poly, with some slack: '*' between coefficient and x,
// arbitrary spacing, repeated exponents summed. Negative coefficients are a
// parse_error.
Polynomial parse_poly(std::string_view text);

// C(n, k) as an exact integer; zero when k < 0 or k > n.
mpz_class binomial(int n, int k);

}  // namespace alliance
