#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "incidence/geometry/curve.hpp"

namespace incidence {

// Points file: one point per line, whitespace-separated `p/q` coordinates.
// Curves file: one record per line,
//   kind=line dim=d      p_1 .. p_d  v_1 .. v_d
//   kind=circle dim=2    cx cy radius
//   kind=circle3d dim=3  cx cy cz radius u1 u2 u3 v1 v2 v3
//   kind=graph dim=d     c_0,c_1,... (one comma list per coordinate 2..d)
//   kind=param dim=d ; P_1 ; ... ; P_d [; den P]
// where P_i are polynomials in x1 (the parameter) in the algebra text
// format. Blank lines and lines starting with '#' are skipped; curve ids
// are 0-based record numbers.

std::vector<Point> read_points(std::istream& in);
void write_points(std::ostream& out, std::span<const Point> points);

Curve parse_curve(std::string_view record, int id);
std::string format_curve(const Curve& curve);

std::vector<Curve> read_curves(std::istream& in);
void write_curves(std::ostream& out, std::span<const Curve> curves);

std::vector<Point> load_points(const std::string& path);
std::vector<Curve> load_curves(const std::string& path);

}  // namespace incidence
