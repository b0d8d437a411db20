#include "incidence/algebra/rational.hpp"

#include <cctype>
#include <string>

#include "incidence/errors.hpp"

namespace incidence {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("malformed rational '" + std::string(text) + "'");
    BigInt d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    result = Rational(BigInt(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw InputError("malformed decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(BigInt(digits.empty() ? "0" : digits, 10), den);
    result.canonicalize();
  } else {
    if (!all_digits(body)) throw InputError("malformed number '" + std::string(text) + "'");
    result = Rational(BigInt(std::string(body), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace incidence
