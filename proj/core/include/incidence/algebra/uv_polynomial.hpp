#pragma once

#include <utility>
#include <vector>

#include "incidence/algebra/rational.hpp"

namespace incidence {

/// Dense univariate polynomial over Q, coefficients indexed by power.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UvPolynomial {
 public:
  UvPolynomial() = default;
  explicit UvPolynomial(std::vector<Rational> coefficients);
  UvPolynomial(std::initializer_list<Rational> coefficients);

  static UvPolynomial constant(const Rational& c);
  static UvPolynomial monomial(const Rational& c, unsigned power);
  /// The identity polynomial t.
  static UvPolynomial identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(evaluate(t)); }

  UvPolynomial derivative() const;
  /// p(t + shift)
  UvPolynomial taylor_shift(const Rational& shift) const;
  /// p(factor * t)
  UvPolynomial scale_argument(const Rational& factor) const;
  /// t^deg * p(1/t)
  UvPolynomial reversed() const;
  UvPolynomial monic() const;
  UvPolynomial pow(unsigned exponent) const;

  UvPolynomial& operator+=(const UvPolynomial& other);
  UvPolynomial& operator-=(const UvPolynomial& other);
  UvPolynomial& operator*=(const Rational& c);
  friend UvPolynomial operator+(UvPolynomial a, const UvPolynomial& b) { return a += b; }
  friend UvPolynomial operator-(UvPolynomial a, const UvPolynomial& b) { return a -= b; }
  friend UvPolynomial operator*(const UvPolynomial& a, const UvPolynomial& b);
  friend UvPolynomial operator*(UvPolynomial a, const Rational& c) { return a *= c; }
  UvPolynomial operator-() const;

  friend bool operator==(const UvPolynomial& a, const UvPolynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; `divisor` must be nonzero.
std::pair<UvPolynomial, UvPolynomial> divmod(const UvPolynomial& dividend,
                                             const UvPolynomial& divisor);
/// Primitive integer polynomial with the same roots (content removed,
/// denominators cleared, sign of the leading coefficient kept).
std::vector<BigInt> primitive_integer_coefficients(const UvPolynomial& p);

/// Monic gcd; gcd(0, 0) = 0.
UvPolynomial gcd(const UvPolynomial& a, const UvPolynomial& b);
/// p / gcd(p, p'), made monic. Zero stays zero.
UvPolynomial square_free_part(const UvPolynomial& p);

}  // namespace incidence
