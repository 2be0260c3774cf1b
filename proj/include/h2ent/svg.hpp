// Copyright 2026 The h2ent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file svg.hpp
/// Minimal standalone SVG rendering of line plots and filled contour maps.
/// Plots are drawn from arrays already present in a Table or ContourGrid.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "h2ent/hydrogen.hpp"

namespace h2ent::svg {

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

inline constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

namespace detail {

struct Bounds {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

inline std::string header(double width, double height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" fill=\"white\"/>\n";
  return os.str();
}

inline void axes(std::ostringstream& os, double x0, double y0, double w, double h, const Bounds& bx,
                 const Bounds& by, const std::string& title, const std::string& xl,
                 const std::string& yl) {
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  char buf[32];
  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    const double xv = bx.lo + t * (bx.hi - bx.lo);
    const double yv = by.lo + t * (by.hi - by.lo);
    std::snprintf(buf, sizeof buf, "%.4g", xv);
    os << "<text x=\"" << num(x0 + t * w) << "\" y=\"" << num(y0 + h + 16)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.4g", yv);
    os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(y0 + h - t * h + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << buf << "</text>\n";
  }
  os << "<text x=\"" << num(x0 + w / 2) << "\" y=\"" << num(y0 - 10)
     << "\" font-size=\"14\" text-anchor=\"middle\">" << escape(title) << "</text>\n";
  os << "<text x=\"" << num(x0 + w / 2) << "\" y=\"" << num(y0 + h + 34)
     << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(xl) << "</text>\n";
  os << "<text x=\"" << num(x0 - 52) << "\" y=\"" << num(y0 + h / 2)
     << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(x0 - 52) << ' '
     << num(y0 + h / 2) << ")\">" << escape(yl) << "</text>\n";
}

}  // namespace detail

/// Vertically stacked line-plot panels in one document.
inline std::string render_line_plots(const std::vector<Panel>& panels) {
  constexpr double kWidth = 640, kPanelH = 360, kLeft = 80, kTop = 40, kPlotW = 420, kPlotH = 270;
  const double height = kPanelH * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  std::ostringstream os;
  os << detail::header(kWidth, height);
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Panel& panel = panels[p];
    detail::Bounds bx, by;
    for (const auto& s : panel.series) {
      for (double v : s.x) bx.add(v);
      for (double v : s.y) by.add(v);
    }
    bx.finish();
    by.finish();
    const double x0 = kLeft, y0 = kTop + kPanelH * static_cast<double>(p);
    detail::axes(os, x0, y0, kPlotW, kPlotH, bx, by, panel.title, panel.x_label, panel.y_label);
    auto px = [&](double v) { return x0 + (v - bx.lo) / (bx.hi - bx.lo) * kPlotW; };
    auto py = [&](double v) { return y0 + kPlotH - (v - by.lo) / (by.hi - by.lo) * kPlotH; };
    for (std::size_t k = 0; k < panel.series.size(); ++k) {
      const Series& s = panel.series[k];
      const char* color = kPalette[k % kPalette.size()];
      std::string d;
      bool pen_down = false;
      for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
          pen_down = false;
          continue;
        }
        d += (pen_down ? " L" : " M") + num(px(s.x[i])) + ' ' + num(py(s.y[i]));
        pen_down = true;
      }
      os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1.5\"/>\n";
      const double ly = y0 + 14.0 + 16.0 * static_cast<double>(k);
      os << "<line x1=\"" << num(x0 + kPlotW + 12) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
         << num(x0 + kPlotW + 32) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color
         << "\" stroke-width=\"2\"/>\n";
      os << "<text x=\"" << num(x0 + kPlotW + 36) << "\" y=\"" << num(ly)
         << "\" font-size=\"11\">" << escape(s.name) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

namespace detail {

inline std::string ramp(double t) {
  // blue -> white -> red
  t = std::clamp(t, 0.0, 1.0);
  int r, g, b;
  if (t < 0.5) {
    const double u = t / 0.5;
    r = static_cast<int>(std::lround(49 + u * (255 - 49)));
    g = static_cast<int>(std::lround(54 + u * (255 - 54)));
    b = static_cast<int>(std::lround(149 + u * (255 - 149)));
  } else {
    const double u = (t - 0.5) / 0.5;
    r = static_cast<int>(std::lround(255 - u * (255 - 165)));
    g = static_cast<int>(std::lround(255 - u * 255));
    b = static_cast<int>(std::lround(255 - u * (255 - 38)));
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace detail

/// Heat map of the grid (values clipped to [level_lo, level_hi]) with
/// marching-squares iso-lines at `levels` evenly spaced values.
inline std::string render_contour(const ContourGrid& grid, double level_lo, double level_hi,
                                  std::size_t levels, const std::string& title) {
  constexpr double kLeft = 80, kTop = 40, kPlotW = 480, kPlotH = 400;
  std::ostringstream os;
  os << detail::header(kLeft + kPlotW + 40, kTop + kPlotH + 60);
  const std::size_t nb = grid.b_values.size(), nr = grid.r_values.size();
  detail::Bounds bx, by;
  bx.add(grid.b_values.front());
  bx.add(grid.b_values.back());
  by.add(grid.r_values.front());
  by.add(grid.r_values.back());
  bx.finish();
  by.finish();
  auto px = [&](double v) { return kLeft + (v - bx.lo) / (bx.hi - bx.lo) * kPlotW; };
  auto py = [&](double v) { return kTop + kPlotH - (v - by.lo) / (by.hi - by.lo) * kPlotH; };
  const double cw = kPlotW / static_cast<double>(nb - 1);
  const double ch = kPlotH / static_cast<double>(nr - 1);
  const double span = level_hi - level_lo;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const double t = span > 0 ? (grid(i, j) - level_lo) / span : 0.5;
      os << "<rect x=\"" << num(px(grid.b_values[j]) - cw / 2) << "\" y=\""
         << num(py(grid.r_values[i]) - ch / 2) << "\" width=\"" << num(cw) << "\" height=\""
         << num(ch) << "\" fill=\"" << detail::ramp(t) << "\"/>\n";
    }

  for (std::size_t l = 0; l < levels; ++l) {
    const double level =
        levels == 1 ? level_lo : level_lo + span * static_cast<double>(l) / static_cast<double>(levels - 1);
    std::string d;
    for (std::size_t i = 0; i + 1 < nr; ++i)
      for (std::size_t j = 0; j + 1 < nb; ++j) {
        // corners counter-clockwise from (i, j)
        const std::array<double, 4> v = {grid(i, j), grid(i, j + 1), grid(i + 1, j + 1), grid(i + 1, j)};
        const std::array<double, 4> xs = {grid.b_values[j], grid.b_values[j + 1], grid.b_values[j + 1],
                                          grid.b_values[j]};
        const std::array<double, 4> ys = {grid.r_values[i], grid.r_values[i], grid.r_values[i + 1],
                                          grid.r_values[i + 1]};
        std::vector<std::pair<double, double>> hits;
        for (int e = 0; e < 4; ++e) {
          const int f = (e + 1) % 4;
          const double a = v[e] - level, b = v[f] - level;
          if ((a < 0.0) != (b < 0.0)) {
            const double t = a / (a - b);
            hits.emplace_back(xs[e] + t * (xs[f] - xs[e]), ys[e] + t * (ys[f] - ys[e]));
          }
        }
        for (std::size_t h = 0; h + 1 < hits.size(); h += 2)
          d += " M" + num(px(hits[h].first)) + ' ' + num(py(hits[h].second)) + " L" +
               num(px(hits[h + 1].first)) + ' ' + num(py(hits[h + 1].second));
      }
    if (!d.empty())
      os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.7\"/>\n";
  }
  detail::axes(os, kLeft, kTop, kPlotW, kPlotH, bx, by, title, "B (Ry)", "r (Bohr)");
  os << "</svg>\n";
  return os.str();
}

}  // namespace h2ent::svg
