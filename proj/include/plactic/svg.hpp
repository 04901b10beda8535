#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "plactic/tableau.hpp"

namespace plactic {

struct RenderSpec {
  double pixels_per_unit = 100.0;
  double row_height = 30.0;
  // Fill colour for letter i + 1; when empty, evenly spaced hues are used.
  std::vector<std::string> palette;
};

inline std::vector<std::string> default_palette(int letters) {
  std::vector<std::string> out;
  for (int c = 0; c < letters; ++c) {
    const int hue = letters > 0 ? (360 * c) / letters : 0;
    out.push_back("hsl(" + std::to_string(hue) + ",70%,55%)");
  }
  return out;
}

namespace detail {
inline std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}
}  // namespace detail

// One horizontal band per row, longest row u_1 at the top; each segment is a
// rectangle of width length * pixels_per_unit coloured by its letter.
inline std::string render_svg(const TimedTableau& t, const RenderSpec& spec = {}) {
  if (!(spec.pixels_per_unit > 0) || !(spec.row_height > 0)) {
    throw domain_error("render scale must be positive");
  }
  const auto palette = spec.palette.empty() ? default_palette(t.alphabet_size()) : spec.palette;
  if (palette.size() < static_cast<std::size_t>(t.alphabet_size())) {
    throw domain_error("palette has fewer colours than letters");
  }
  const double width = t.empty() ? 0.0 : t.rows()[0].length().to_double() * spec.pixels_per_unit;
  const double height = static_cast<double>(t.row_count()) * spec.row_height;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(width) +
                    "\" height=\"" + detail::fixed(height) + "\" viewBox=\"0 0 " +
                    detail::fixed(width) + " " + detail::fixed(height) + "\">\n";
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    const auto& row = t.rows()[r];
    const double y = static_cast<double>(r) * spec.row_height;
    out += "  <g class=\"row\" data-row=\"" + std::to_string(r + 1) + "\" data-length=\"" +
           row.length().str() + "\">\n";
    Duration x;
    for (const auto& s : row.segments()) {
      out += "    <rect x=\"" + detail::fixed(x.to_double() * spec.pixels_per_unit) + "\" y=\"" +
             detail::fixed(y) + "\" width=\"" +
             detail::fixed(s.length.to_double() * spec.pixels_per_unit) + "\" height=\"" +
             detail::fixed(spec.row_height) + "\" fill=\"" +
             palette[static_cast<std::size_t>(s.letter - 1)] + "\" data-letter=\"" +
             std::to_string(s.letter) + "\"/>\n";
      x += s.length;
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace plactic
