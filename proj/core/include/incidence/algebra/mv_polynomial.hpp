#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "incidence/algebra/rational.hpp"

namespace incidence {

using Exponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponent& e);

/// Graded order, higher total degree first, ties broken by reverse lex.
/// Determines the canonical printing order of terms.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class MvPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational, MonomialOrder>;

  explicit MvPolynomial(std::size_t dimension = 1);

  static MvPolynomial constant(std::size_t dimension, const Rational& c);
  /// The coordinate function x_{index}, 0-based.
  static MvPolynomial variable(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return dimension_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Adds `c * x^e` to the polynomial, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  Rational evaluate(std::span<const Rational> x) const;

  MvPolynomial& operator+=(const MvPolynomial& other);
  MvPolynomial& operator-=(const MvPolynomial& other);
  MvPolynomial& operator*=(const Rational& c);

  friend MvPolynomial operator+(MvPolynomial a, const MvPolynomial& b) { return a += b; }
  friend MvPolynomial operator-(MvPolynomial a, const MvPolynomial& b) { return a -= b; }
  friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b);
  friend MvPolynomial operator*(MvPolynomial a, const Rational& c) { return a *= c; }
  friend MvPolynomial operator*(const Rational& c, MvPolynomial a) { return a *= c; }
  MvPolynomial operator-() const;
  MvPolynomial pow(unsigned exponent) const;

  friend bool operator==(const MvPolynomial& a, const MvPolynomial& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

 private:
  void check_dimension(const MvPolynomial& other) const;

  std::size_t dimension_;
  TermMap terms_;
};

}  // namespace incidence
