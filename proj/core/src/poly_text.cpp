#include "incidence/algebra/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "incidence/errors.hpp"

namespace incidence {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view digits, std::string_view context) {
  if (digits.empty()) throw InputError("missing number in '" + std::string(context) + "'");
  std::size_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("malformed token '" + std::string(context) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

void parse_term(std::string_view term, std::size_t dimension, MvPolynomial& out) {
  Rational coefficient = 1;
  if (!term.empty() && (term.front() == '-' || term.front() == '+')) {
    if (term.front() == '-') coefficient = -1;
    term = trim(term.substr(1));
  }
  Exponent e(dimension, 0);
  bool seen_factor = false;
  std::size_t pos = 0;
  while (pos < term.size()) {
    const char c = term[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < term.size() && !std::isspace(static_cast<unsigned char>(term[end])) &&
           term[end] != '*')
      ++end;
    const std::string_view token = term.substr(pos, end - pos);
    pos = end;
    seen_factor = true;
    if (token.front() == 'x') {
      const auto caret = token.find('^');
      const std::size_t var = parse_index(token.substr(1, caret == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : caret - 1),
                                          token);
      if (var == 0 || var > dimension)
        throw InputError("variable '" + std::string(token) + "' outside dimension " +
                         std::to_string(dimension));
      const std::size_t power =
          caret == std::string_view::npos ? 1 : parse_index(token.substr(caret + 1), token);
      e[var - 1] += static_cast<std::uint32_t>(power);
    } else {
      coefficient *= parse_rational(token);
    }
  }
  if (!seen_factor) throw InputError("empty polynomial term");
  out.add_term(e, coefficient);
}

}  // namespace

std::string format_polynomial(const MvPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (first_var ? " * " : " ") << 'x' << (i + 1) << '^' << e[i];
      first_var = false;
    }
  }
  return os.str();
}

MvPolynomial parse_polynomial(std::string_view text, std::size_t dimension) {
  MvPolynomial out(dimension);
  const std::string_view body = trim(text);
  if (body.empty()) throw InputError("empty polynomial text");
  // A sign splits terms unless it directly follows '*', '^' or '/' (or
  // opens a term); '-' stays with the term it negates.
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] != '+' && body[i] != '-') continue;
    const std::string_view before = trim(body.substr(start, i - start));
    if (i < body.size()) {
      const bool leading = before.empty() || before == "-" || before == "+";
      const char last = before.empty() ? ' ' : before.back();
      if (leading || last == '*' || last == '^' || last == '/') continue;
    }
    parse_term(before, dimension, out);
    start = i < body.size() && body[i] == '-' ? i : i + 1;
  }
  return out;
}

UvPolynomial to_univariate(const MvPolynomial& p) {
  if (p.dimension() != 1) throw InputError("expected a univariate polynomial");
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
  return UvPolynomial(std::move(coeffs));
}

MvPolynomial to_multivariate(const UvPolynomial& p) {
  MvPolynomial out(1);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out.add_term({static_cast<std::uint32_t>(i)}, c[i]);
  return out;
}

std::string format_polynomial(const UvPolynomial& p) {
  return format_polynomial(to_multivariate(p));
}

UvPolynomial parse_univariate(std::string_view text) {
  return to_univariate(parse_polynomial(text, 1));
}

}  // namespace incidence
