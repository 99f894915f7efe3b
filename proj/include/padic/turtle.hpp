#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace padic {

// ---------------------------------------------------------------------------
// Angle: a rational number of degrees in (0, 180].
// ---------------------------------------------------------------------------

class Angle {
 public:
  static constexpr std::int64_t max_denominator = 1'000'000;

  constexpr Angle(std::int64_t numerator, std::int64_t denominator = 1) : num_(numerator), den_(denominator) {
    if (den_ <= 0 || den_ > max_denominator) throw std::invalid_argument("Angle: denominator out of range");
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
    if (num_ <= 0) throw std::invalid_argument("Angle: must be positive");
    if (num_ > 180 * den_) throw std::invalid_argument("Angle: must not exceed 180 degrees");
  }

  /// Accepts "90", "137.5" or "360/7".
  static Angle parse(std::string_view text) {
    auto to_int = [&](std::string_view part) {
      std::int64_t v = 0;
      const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc{} || end != part.data() + part.size() || part.empty())
        throw std::invalid_argument("Angle: cannot parse '" + std::string(text) + "'");
      return v;
    };
    if (const auto slash = text.find('/'); slash != std::string_view::npos)
      return Angle(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      const std::string_view frac = text.substr(dot + 1);
      if (frac.size() > 6) throw std::invalid_argument("Angle: at most 6 decimal places");
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::int64_t whole = dot == 0 ? 0 : to_int(text.substr(0, dot));
      return Angle(whole * scale + (frac.empty() ? 0 : to_int(frac)), scale);
    }
    return Angle(to_int(text));
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }
  double degrees() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Number of distinct headings reachable: 360 / gcd(angle, 360).
  constexpr std::int64_t heading_modulus() const { return 360 * den_ / std::gcd(num_, 360 * den_); }

  /// This angle as a count of atomic units (360 / heading_modulus degrees).
  constexpr std::int64_t units() const { return num_ / std::gcd(num_, 360 * den_); }

  friend constexpr bool operator==(const Angle&, const Angle&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// ---------------------------------------------------------------------------
// Turn programs
// ---------------------------------------------------------------------------

enum class TurnMapping {
  ccw_count,        // term t turns t * angle counterclockwise
  categorical_mod4  // t mod 4: 0 right, 1 straight, 2 left, 3 two units left
};

struct TurnProgram {
  std::vector<std::int64_t> terms;  // terms[i] is applied at vertex i+1
  Angle angle{90};
  TurnMapping mapping = TurnMapping::ccw_count;
  bool mirrored = false;  // flips every turn's direction
};

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct PolylinePath {
  std::vector<Point> vertices;
  std::vector<std::int64_t> headings;  // per segment, atomic units in [0, heading_modulus)
  std::int64_t heading_modulus = 1;
  bool lattice = false;  // coordinates are exact integers
};

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Heading change (atomic units, counterclockwise positive, reduced mod the
/// heading modulus) produced by one term.
inline std::int64_t turn_units(const TurnProgram& program, std::int64_t term) {
  const std::int64_t modulus = program.angle.heading_modulus();
  const std::int64_t step = program.angle.units();
  std::int64_t multiple = 0;
  switch (program.mapping) {
    case TurnMapping::ccw_count:
      multiple = detail::floor_mod(term, modulus);
      break;
    case TurnMapping::categorical_mod4: {
      static constexpr std::array<std::int64_t, 4> table{-1, 0, 1, 2};
      multiple = table[static_cast<std::size_t>(detail::floor_mod(term, 4))];
      break;
    }
  }
  if (program.mirrored) multiple = -multiple;
  return detail::floor_mod(multiple * step, modulus);
}

/// Move first, then turn. The turtle starts at the origin facing +x, walks
/// one unit to vertex 1, applies the turn for terms[1], walks to vertex 2,
/// and so on. The turn at the last vertex changes no coordinates, so the
/// path has |terms| + 1 vertices.
inline PolylinePath trace(const TurnProgram& program) {
  if (program.terms.empty()) throw std::invalid_argument("trace: program has no terms");
  const std::int64_t modulus = program.angle.heading_modulus();

  PolylinePath path;
  path.heading_modulus = modulus;
  path.lattice = modulus == 2 || modulus == 4;
  path.vertices.reserve(program.terms.size() + 1);
  path.headings.reserve(program.terms.size());
  path.vertices.push_back({0, 0});

  std::int64_t heading = 0;
  if (path.lattice) {
    // Quarter-turn unit vectors; a modulus-2 heading h is quarter turn 2h.
    static constexpr std::array<std::array<std::int64_t, 2>, 4> quarter{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    const std::int64_t quarters_per_unit = 4 / modulus;
    std::int64_t x = 0;
    std::int64_t y = 0;
    for (const std::int64_t term : program.terms) {
      const auto& d = quarter[static_cast<std::size_t>(heading * quarters_per_unit)];
      x += d[0];
      y += d[1];
      path.vertices.push_back({static_cast<double>(x), static_cast<double>(y)});
      path.headings.push_back(heading);
      heading = (heading + turn_units(program, term)) % modulus;
    }
    return path;
  }

  std::vector<Point> unit(static_cast<std::size_t>(modulus));
  for (std::int64_t h = 0; h < modulus; ++h) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(modulus);
    unit[static_cast<std::size_t>(h)] = {std::cos(theta), std::sin(theta)};
  }
  Point at{0, 0};
  for (const std::int64_t term : program.terms) {
    const Point& d = unit[static_cast<std::size_t>(heading)];
    at.x += d.x;
    at.y += d.y;
    path.vertices.push_back(at);
    path.headings.push_back(heading);
    heading = (heading + turn_units(program, term)) % modulus;
  }
  return path;
}

/// Same vertex count and every pair of corresponding vertices within
/// `tolerance`. A tolerance of 0 demands exact equality.
inline bool path_equal(const PolylinePath& a, const PolylinePath& b, double tolerance) {
  if (tolerance < 0) throw std::invalid_argument("path_equal: negative tolerance");
  if (a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const double dx = a.vertices[i].x - b.vertices[i].x;
    const double dy = a.vertices[i].y - b.vertices[i].y;
    if (tolerance == 0) {
      if (dx != 0 || dy != 0) return false;
    } else if (std::hypot(dx, dy) > tolerance) {
      return false;
    }
  }
  return true;
}

/// Vertices first..last (inclusive, 0-based) moved so the first sits at the
/// origin and the first segment points along +x. Exact in lattice mode.
inline PolylinePath normalized_subpath(const PolylinePath& path, std::size_t first, std::size_t last) {
  if (first >= last || last >= path.vertices.size())
    throw std::out_of_range("normalized_subpath: bad vertex range");
  PolylinePath out;
  out.heading_modulus = path.heading_modulus;
  out.lattice = path.lattice;
  const std::int64_t base = path.headings[first];
  const Point origin = path.vertices[first];
  const double theta = -2.0 * std::numbers::pi * static_cast<double>(base) / static_cast<double>(path.heading_modulus);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::int64_t quarters = path.lattice ? detail::floor_mod(-base * (4 / path.heading_modulus), 4) : 0;
  for (std::size_t i = first; i <= last; ++i) {
    const double dx = path.vertices[i].x - origin.x;
    const double dy = path.vertices[i].y - origin.y;
    Point p;
    if (path.lattice) {
      switch (quarters) {
        case 0: p = {dx, dy}; break;
        case 1: p = {-dy, dx}; break;
        case 2: p = {-dx, -dy}; break;
        default: p = {dy, -dx}; break;
      }
      p.x += 0.0;  // no negative zeros
      p.y += 0.0;
    } else {
      p = {c * dx - s * dy, s * dx + c * dy};
    }
    out.vertices.push_back(p);
    if (i < last) out.headings.push_back(detail::floor_mod(path.headings[i] - base, path.heading_modulus));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

struct SvgOptions {
  double stroke_width = 0;  // in path units; <= 0 picks one from the extent
  double margin = 1;        // in path units
  int canvas_size = 1024;   // pixels, both width and height
  std::string stroke = "black";
};

namespace detail {

inline void append_fixed6(std::string& out, double v) {
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.6f", v);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace detail

/// One standalone SVG 1.1 document holding a single polyline. The y axis is
/// flipped so counterclockwise turns stay counterclockwise on screen.
inline std::string to_svg(const PolylinePath& path, const SvgOptions& options = {}) {
  if (path.vertices.empty()) throw std::invalid_argument("to_svg: empty path");
  double min_x = path.vertices.front().x;
  double max_x = min_x;
  double min_y = path.vertices.front().y;
  double max_y = min_y;
  for (const Point& p : path.vertices) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double stroke = options.stroke_width > 0 ? options.stroke_width : extent / 500.0;

  std::string out;
  out.reserve(path.vertices.size() * 24 + 512);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  out += std::to_string(options.canvas_size) + "\" height=\"" + std::to_string(options.canvas_size);
  out += "\" viewBox=\"";
  detail::append_fixed6(out, min_x - options.margin);
  out += ' ';
  detail::append_fixed6(out, -max_y - options.margin);
  out += ' ';
  detail::append_fixed6(out, max_x - min_x + 2 * options.margin);
  out += ' ';
  detail::append_fixed6(out, max_y - min_y + 2 * options.margin);
  out += "\">\n";
  out += "<polyline fill=\"none\" stroke=\"" + options.stroke + "\" stroke-width=\"";
  detail::append_fixed6(out, stroke);
  out += "\" stroke-linejoin=\"round\" stroke-linecap=\"round\" points=\"";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += ' ';
    detail::append_fixed6(out, path.vertices[i].x);
    out += ',';
    detail::append_fixed6(out, -path.vertices[i].y);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

}  // namespace padic
