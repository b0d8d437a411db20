#include "incidence/algebra/uv_polynomial.hpp"

#include <cstdint>
#include <stdexcept>

#include "incidence/errors.hpp"

namespace incidence {

UvPolynomial::UvPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UvPolynomial::UvPolynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  trim();
}

UvPolynomial UvPolynomial::constant(const Rational& c) { return UvPolynomial({c}); }

UvPolynomial UvPolynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = c;
  return UvPolynomial(std::move(coeffs));
}

UvPolynomial UvPolynomial::identity() { return monomial(1, 1); }

void UvPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UvPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational UvPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UvPolynomial UvPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UvPolynomial(std::move(out));
}

UvPolynomial UvPolynomial::taylor_shift(const Rational& shift) const {
  std::vector<Rational> c = coeffs_;
  if (shift == 0) return *this;
  const std::size_t n = c.size();
  // repeated synthetic division (Horner scheme), O(n^2)
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += shift * c[j + 1];
  return UvPolynomial(std::move(c));
}

UvPolynomial UvPolynomial::scale_argument(const Rational& factor) const {
  std::vector<Rational> c = coeffs_;
  Rational power = 1;
  for (auto& coeff : c) {
    coeff *= power;
    power *= factor;
  }
  return UvPolynomial(std::move(c));
}

UvPolynomial UvPolynomial::reversed() const {
  return UvPolynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

UvPolynomial UvPolynomial::monic() const {
  if (is_zero()) return *this;
  UvPolynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

UvPolynomial UvPolynomial::pow(unsigned exponent) const {
  UvPolynomial result = constant(1);
  UvPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

UvPolynomial& UvPolynomial::operator+=(const UvPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UvPolynomial& UvPolynomial::operator-=(const UvPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UvPolynomial& UvPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

UvPolynomial operator*(const UvPolynomial& a, const UvPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UvPolynomial(std::move(out));
}

UvPolynomial UvPolynomial::operator-() const {
  UvPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<UvPolynomial, UvPolynomial> divmod(const UvPolynomial& dividend,
                                             const UvPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UvPolynomial{}, dividend};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd), Rational(0));
  const Rational& lead = divisor.leading();
  const auto& dc = divisor.coefficients();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * dc[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UvPolynomial(std::move(quot)), UvPolynomial(std::move(rem))};
}

std::vector<BigInt> primitive_integer_coefficients(const UvPolynomial& p) {
  BigInt lcm = 1;
  for (const auto& c : p.coefficients()) {
    BigInt den = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    out.push_back(c.get_num() * (lcm / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

using IntPoly = std::vector<BigInt>;

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

__extension__ typedef unsigned __int128 Wide;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::vector<std::uint64_t> reduce(const IntPoly& p) {
  std::vector<std::uint64_t> out;
  for (const auto& c : p) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), kPrime));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd(a mod p, b mod p); an upper bound on the degree of the
// rational gcd when p divides neither leading coefficient.
int modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + kPrime - mulmod(f, b[i])) % kPrime;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

void make_primitive(IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, reduced to its primitive part.
IntPoly primitive_remainder(IntPoly a, const IntPoly& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  make_primitive(a);
  return a;
}

UvPolynomial from_integer(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return UvPolynomial(std::move(c));
}

}  // namespace

UvPolynomial gcd(const UvPolynomial& a, const UvPolynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = primitive_integer_coefficients(a);
  IntPoly y = primitive_integer_coefficients(b);
  if (mpz_fdiv_ui(x.back().get_mpz_t(), kPrime) != 0 &&
      mpz_fdiv_ui(y.back().get_mpz_t(), kPrime) != 0 &&
      modular_gcd_degree(reduce(x), reduce(y)) == 0)
    return UvPolynomial::constant(1);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = primitive_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integer(x).monic();
}

UvPolynomial square_free_part(const UvPolynomial& p) {
  if (p.is_zero()) return p;
  if (p.degree() <= 1) return p.monic();
  const UvPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return divmod(p, g).first.monic();
}

}  // namespace incidence
