#include "incidence/algebra/root_isolation.hpp"

#include <algorithm>
#include <utility>

#include "incidence/errors.hpp"

namespace incidence {

namespace {

int sign_variations(const UvPolynomial& p) {
  int variations = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int descartes_bound(const UvPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("descartes_bound on the zero polynomial");
  // roots of p in (lo, hi)  <->  roots of q in (0, 1)  <->  roots of r in (0, inf)
  const UvPolynomial q = p.taylor_shift(lo).scale_argument(hi - lo);
  const UvPolynomial r = q.reversed().taylor_shift(1);
  return sign_variations(r);
}

Rational cauchy_bound(const UvPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("cauchy_bound on the zero polynomial");
  Rational m = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational ratio = abs(c[i] / p.leading());
    if (ratio > m) m = ratio;
  }
  return m + 2;
}

namespace {

using IntPoly = std::vector<BigInt>;  // coefficients by power

// p(x) -> p(x + 1)
void shift_one(IntPoly& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] += p[j];
}

// p(x) -> p(x - 1)
void shift_minus_one(IntPoly& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] -= p[j];
}

int variations(const IntPoly& p) {
  int v = 0, last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Sign changes of (x + 1)^n p(1 / (x + 1)): bounds the roots in (0, 1).
int descartes01(const IntPoly& p) {
  IntPoly r(p.rbegin(), p.rend());
  shift_one(r);
  return variations(r);
}

// 2^n p(x / 2): the left half of (0, 1) rescaled onto (0, 1).
IntPoly halve(const IntPoly& p) {
  IntPoly out(p);
  const std::size_t n = p.size() - 1;
  for (std::size_t i = 0; i < n; ++i) mpz_mul_2exp(out[i].get_mpz_t(), p[i].get_mpz_t(), n - i);
  return out;
}

// Exact division by (x - 1) when p(1) = 0.
IntPoly deflate_at_one(const IntPoly& p) {
  IntPoly out(p.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry += p[i];
    out[i - 1] = carry;
  }
  return out;
}

struct Node {
  IntPoly poly;  // roots in (0, 1) correspond to roots in the node interval
  BigInt c;      // interval [c / 2^k, (c + 1) / 2^k] of the unit interval
  unsigned long k;
  bool lo_root = false;  // an endpoint is a root already divided out of poly
  bool hi_root = false;
};

std::pair<Node, Node> split(const Node& node) {
  IntPoly left = halve(node.poly);
  IntPoly right = left;
  shift_one(right);
  return {Node{std::move(left), 2 * node.c, node.k + 1, node.lo_root, false},
          Node{std::move(right), 2 * node.c + 1, node.k + 1, false, node.hi_root}};
}

}  // namespace

RootIsolation isolate_real_roots(const UvPolynomial& q) {
  if (q.is_zero())
    throw ZeroPolynomial("restriction vanishes identically (curve contained in zero set)");
  RootIsolation out;
  out.square_free = square_free_part(q);
  out.multiplicity_free = out.square_free.degree() == q.degree();
  const UvPolynomial& s = out.square_free;
  if (s.degree() <= 0) return out;
  if (s.degree() == 1) {
    const Rational root = -s.coefficient(0) / s.coefficient(1);
    out.intervals.push_back({root, root});
    return out;
  }

  // Roots lie in (-B, B) with B = 2^e >= Cauchy's bound.
  const IntPoly p = primitive_integer_coefficients(s);
  BigInt maxabs = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) maxabs = std::max<BigInt>(maxabs, abs(p[i]));
  const long e = std::max<long>(
      1, static_cast<long>(mpz_sizeinbase(maxabs.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(p.back().get_mpz_t(), 2)) + 2);
  // Unit interval t in [0, 1] maps to x = B (2t - 1).
  IntPoly root(p);
  for (std::size_t i = 0; i < root.size(); ++i)
    mpz_mul_2exp(root[i].get_mpz_t(), root[i].get_mpz_t(), static_cast<unsigned long>(e) * i);
  shift_minus_one(root);
  for (std::size_t i = 0; i < root.size(); ++i)
    mpz_mul_2exp(root[i].get_mpz_t(), root[i].get_mpz_t(), i);

  const Rational B(BigInt(1) << static_cast<mp_bitcnt_t>(e));
  auto to_x = [&](const BigInt& c, unsigned long k) {
    Rational t(c, BigInt(1) << static_cast<mp_bitcnt_t>(k));
    t.canonicalize();
    return Rational(B * (2 * t - 1));
  };

  std::vector<Node> pending;
  pending.push_back({std::move(root), BigInt(0), 0});
  while (!pending.empty()) {
    Node node = std::move(pending.back());
    pending.pop_back();
    const int v = descartes01(node.poly);
    if (v == 0) continue;
    if (v == 1) {
      // The single root is interior; bisect away from endpoints that are
      // roots themselves. The node polynomial is nonzero at both ends.
      while (node.lo_root || node.hi_root) {
        const int s0 = sgn(node.poly.front());
        auto [left, right] = split(node);
        const int sm = sgn(right.poly.front());
        if (sm == 0) break;
        node = sm != s0 ? std::move(left) : std::move(right);
      }
      if (node.lo_root || node.hi_root) {
        const Rational mid = to_x(2 * node.c + 1, node.k + 1);
        out.intervals.push_back({mid, mid});
      } else {
        out.intervals.push_back({to_x(node.c, node.k), to_x(node.c + 1, node.k)});
      }
      continue;
    }
    auto [left, right] = split(node);
    if (sgn(right.poly.front()) == 0) {
      // The midpoint is a root: record it and divide it out of both halves.
      out.intervals.push_back({to_x(right.c, right.k), to_x(right.c, right.k)});
      left.poly = deflate_at_one(left.poly);
      left.hi_root = true;
      right.poly.erase(right.poly.begin());
      right.lo_root = true;
    }
    pending.push_back(std::move(right));
    pending.push_back(std::move(left));
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine_once(const UvPolynomial& square_free, const RootInterval& interval) {
  if (interval.exact()) return interval;
  Rational mid = (interval.lo + interval.hi) / 2;
  const int sm = square_free.sign_at(mid);
  if (sm == 0) return {mid, mid};
  if (square_free.sign_at(interval.lo) != sm) return {interval.lo, mid};
  return {mid, interval.hi};
}

RootInterval refine(const UvPolynomial& square_free, RootInterval interval,
                    const Rational& max_width) {
  while (!interval.exact() && interval.width() > max_width)
    interval = refine_once(square_free, interval);
  return interval;
}

bool has_real_root(const UvPolynomial& q) {
  if (q.is_zero()) return true;
  if (q.degree() % 2 == 1) return true;
  return isolate_real_roots(q).count() > 0;
}

}  // namespace incidence
