#include "incidence/algebra/mv_polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "incidence/errors.hpp"

namespace incidence {

std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MvPolynomial::MvPolynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw InputError("polynomial dimension must be >= 1");
}

MvPolynomial MvPolynomial::constant(std::size_t dimension, const Rational& c) {
  MvPolynomial p(dimension);
  p.add_term(Exponent(dimension, 0), c);
  return p;
}

MvPolynomial MvPolynomial::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw InputError("variable index out of range");
  MvPolynomial p(dimension);
  Exponent e(dimension, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int MvPolynomial::degree() const {
  // the map is ordered by descending total degree
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

void MvPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != dimension_) throw InputError("exponent length does not match dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MvPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MvPolynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != dimension_)
    throw InputError("evaluation point has dimension " + std::to_string(x.size()) +
                     ", polynomial has " + std::to_string(dimension_));
  if (terms_.empty()) return 0;
  // powers[i][a] = x_i^a, built lazily up to the largest exponent needed
  std::vector<std::vector<Rational>> powers(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) powers[i].push_back(1);
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * x[i]);
      term *= pw[e[i]];
    }
    sum += term;
  }
  return sum;
}

void MvPolynomial::check_dimension(const MvPolynomial& other) const {
  if (other.dimension_ != dimension_) throw InputError("polynomial dimension mismatch");
}

MvPolynomial& MvPolynomial::operator+=(const MvPolynomial& other) {
  check_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MvPolynomial& MvPolynomial::operator-=(const MvPolynomial& other) {
  check_dimension(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MvPolynomial& MvPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b) {
  a.check_dimension(b);
  MvPolynomial out(a.dimension_);
  Exponent e(a.dimension_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MvPolynomial MvPolynomial::operator-() const {
  MvPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MvPolynomial MvPolynomial::pow(unsigned exponent) const {
  MvPolynomial result = constant(dimension_, 1);
  MvPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace incidence
