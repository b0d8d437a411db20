#include "incidence/algebra/veronese.hpp"

#include "incidence/errors.hpp"

namespace incidence {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::size_t lifted_dimension(std::size_t d, unsigned degree) {
  return binomial(degree + d, d) - 1;
}

unsigned min_lift_degree(std::size_t d, std::size_t subsets) {
  if (d == 0) throw InputError("dimension must be >= 1");
  unsigned degree = 1;
  while (lifted_dimension(d, degree) < subsets) ++degree;
  return degree;
}

namespace {

// all exponents of total degree `remaining` over coordinates [index, d),
// first coordinate's exponent descending
void exponents_of_degree(std::size_t d, std::size_t index, unsigned remaining, Exponent& current,
                         std::vector<Exponent>& out) {
  if (index + 1 == d) {
    current[index] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned a = remaining + 1; a-- > 0;) {
    current[index] = a;
    exponents_of_degree(d, index + 1, remaining - a, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Exponent> veronese_exponents(std::size_t d, unsigned degree) {
  if (d == 0 || degree == 0) throw InputError("veronese lift needs d >= 1 and D >= 1");
  std::vector<Exponent> out;
  out.reserve(lifted_dimension(d, degree));
  Exponent current(d, 0);
  for (unsigned total = 1; total <= degree; ++total) exponents_of_degree(d, 0, total, current, out);
  return out;
}

std::vector<Rational> veronese_lift(std::span<const Rational> x, unsigned degree) {
  const auto exponents = veronese_exponents(x.size(), degree);
  std::vector<Rational> lifted;
  lifted.reserve(exponents.size());
  for (const auto& e : exponents) {
    Rational value = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned a = 0; a < e[i]; ++a) value *= x[i];
    lifted.push_back(std::move(value));
  }
  return lifted;
}

}  // namespace incidence
