#include "incidence/geometry/curve_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "incidence/algebra/poly_text.hpp"
#include "incidence/errors.hpp"

namespace incidence {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                        : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool skip_line(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::string join_rationals(const std::vector<Rational>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

std::string value_of(const std::string& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) throw InputError("expected '" + prefix + "...' but got '" + token + "'");
  return token.substr(prefix.size());
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::vector<Rational> coords;
    try {
      for (const auto& tok : split_ws(line)) coords.push_back(parse_rational(tok));
    } catch (const InputError& e) {
      throw InputError("points line " + std::to_string(line_no) + ": " + e.what());
    }
    if (dim == 0) dim = coords.size();
    if (coords.size() != dim)
      throw InputError("points line " + std::to_string(line_no) + ": expected " +
                       std::to_string(dim) + " coordinates");
    points.emplace_back(std::move(coords));
  }
  return points;
}

void write_points(std::ostream& out, std::span<const Point> points) {
  for (const auto& p : points) out << join_rationals(p.coords, " ") << '\n';
}

Curve parse_curve(std::string_view record, int id) {
  const auto body = trim(record);
  const auto semicolon = body.find(';');
  const auto head = split_ws(body.substr(0, semicolon));
  if (head.size() < 2) throw InputError("curve record needs 'kind=... dim=...'");
  const std::string kind = value_of(head[0], "kind");
  std::size_t dim = 0;
  try {
    dim = std::stoul(value_of(head[1], "dim"));
  } catch (const std::logic_error&) {
    throw InputError("malformed dim in curve record");
  }
  std::vector<std::string> args(head.begin() + 2, head.end());
  auto rationals = [&](std::size_t expected) {
    if (args.size() != expected)
      throw InputError("kind=" + kind + " expects " + std::to_string(expected) + " parameters, got " +
                       std::to_string(args.size()));
    std::vector<Rational> v;
    for (const auto& a : args) v.push_back(parse_rational(a));
    return v;
  };

  if (kind == "param") {
    if (semicolon == std::string_view::npos || !args.empty())
      throw InputError("kind=param expects '; P1 ; ... ; Pd'");
    auto pieces = split(body.substr(semicolon + 1), ';');
    Parametrization p;
    for (const auto& piece : pieces) {
      if (piece.rfind("den", 0) == 0) {
        p.denominator = parse_univariate(trim(std::string_view(piece).substr(3)));
      } else {
        p.numerators.push_back(parse_univariate(piece));
      }
    }
    return Curve::make(id, dim, std::move(p));
  }
  if (semicolon != std::string_view::npos) throw InputError("unexpected ';' in kind=" + kind);
  if (kind == "line") {
    auto v = rationals(2 * dim);
    return Curve::make(id, dim,
                       LineSpec{{v.begin(), v.begin() + static_cast<long>(dim)},
                                {v.begin() + static_cast<long>(dim), v.end()}});
  }
  if (kind == "circle") {
    auto v = rationals(3);
    return Curve::make(id, dim, CircleSpec{v[0], v[1], v[2]});
  }
  if (kind == "circle3d") {
    auto v = rationals(10);
    return Curve::make(id, dim,
                       Circle3dSpec{{v[0], v[1], v[2]}, v[3], {v[4], v[5], v[6]}, {v[7], v[8], v[9]}});
  }
  if (kind == "graph") {
    GraphSpec g;
    for (const auto& a : args) {
      std::vector<Rational> coeffs;
      for (const auto& c : split(a, ',')) coeffs.push_back(parse_rational(c));
      g.coordinates.emplace_back(std::move(coeffs));
    }
    return Curve::make(id, dim, std::move(g));
  }
  throw InputError("unknown curve kind '" + kind + "'");
}

std::string format_curve(const Curve& curve) {
  std::ostringstream os;
  os << "kind=" << to_string(curve.kind()) << " dim=" << curve.dimension();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LineSpec>) {
          os << ' ' << join_rationals(s.point, " ") << ' ' << join_rationals(s.direction, " ");
        } else if constexpr (std::is_same_v<T, CircleSpec>) {
          os << ' ' << to_string(s.cx) << ' ' << to_string(s.cy) << ' ' << to_string(s.radius);
        } else if constexpr (std::is_same_v<T, Circle3dSpec>) {
          os << ' ' << join_rationals({s.center.begin(), s.center.end()}, " ") << ' '
             << to_string(s.radius) << ' ' << join_rationals({s.u.begin(), s.u.end()}, " ") << ' '
             << join_rationals({s.v.begin(), s.v.end()}, " ");
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          for (const auto& g : s.coordinates) {
            auto coeffs = g.coefficients();
            if (coeffs.empty()) coeffs.push_back(0);
            os << ' ' << join_rationals(coeffs, ",");
          }
        } else if constexpr (std::is_same_v<T, Parametrization>) {
          for (const auto& n : s.numerators) os << " ; " << format_polynomial(n);
          if (!s.polynomial() || s.denominator != UvPolynomial::constant(1))
            os << " ; den " << format_polynomial(s.denominator);
        } else {
          throw InputError("implicit-only curves have no file representation");
        }
      },
      curve.spec());
  return os.str();
}

std::vector<Curve> read_curves(std::istream& in) {
  std::vector<Curve> curves;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    try {
      curves.push_back(parse_curve(line, static_cast<int>(curves.size())));
    } catch (const InputError& e) {
      throw InputError("curves line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return curves;
}

void write_curves(std::ostream& out, std::span<const Curve> curves) {
  for (const auto& c : curves) out << format_curve(c) << '\n';
}

std::vector<Point> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open points file '" + path + "'");
  return read_points(in);
}

std::vector<Curve> load_curves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open curves file '" + path + "'");
  return read_curves(in);
}

}  // namespace incidence
