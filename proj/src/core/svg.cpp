// Copyright 2026 The kkmds Authors
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

#include "kkmds/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "kkmds/error.hpp"

namespace kkmds {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
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

}  // namespace

std::string render_svg(const Layout& x, const SvgOptions& opt) {
  const std::size_t n = x.size();
  if (!opt.labels.empty() && opt.labels.size() != n)
    throw_parameter("label count " + std::to_string(opt.labels.size()) + " differs from layout size " + std::to_string(n));
  if (opt.edges && opt.edges->vertex_count() != n) throw_parameter("graph and layout sizes differ");

  auto px = [&](std::size_t i) { return x.dim() >= 1 ? x(i, 0) : 0.0; };
  // SVG y grows downwards; negate so the picture matches the usual axes.
  auto py = [&](std::size_t i) { return x.dim() >= 2 ? -x(i, 1) : 0.0; };

  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x0 = i == 0 ? px(i) : std::min(x0, px(i));
    x1 = i == 0 ? px(i) : std::max(x1, px(i));
    y0 = i == 0 ? py(i) : std::min(y0, py(i));
    y1 = i == 0 ? py(i) : std::max(y1, py(i));
  }
  double w = x1 - x0, h = y1 - y0;
  const double extent = std::max({w, h, 1e-9});
  if (w < 1e-3 * extent) w = 0.1 * extent, x0 -= 0.05 * extent;
  if (h < 1e-3 * extent) h = 0.1 * extent, y0 -= 0.05 * extent;
  const double vx = x0 - 0.05 * w, vw = 1.1 * w;
  const bool has_text = !opt.title.empty() || opt.normalized_stress;
  const double band = has_text ? 0.12 * vw : 0.0;
  const double vy = y0 - 0.05 * h - band, vh = 1.1 * h + band;
  const double r = 0.008 * vw;
  const double pixels = 800.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(pixels) << "\" height=\""
      << num(pixels * vh / vw) << "\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(vw) << ' ' << num(vh)
      << "\">\n";
  out << "<rect x=\"" << num(vx) << "\" y=\"" << num(vy) << "\" width=\"" << num(vw) << "\" height=\"" << num(vh)
      << "\" fill=\"white\"/>\n";
  if (has_text) {
    const double fs = 0.035 * vw;
    double ty = vy + 1.2 * fs;
    if (!opt.title.empty()) {
      out << "<text x=\"" << num(vx + 0.5 * vw) << "\" y=\"" << num(ty) << "\" font-size=\"" << num(fs)
          << "\" font-family=\"sans-serif\" text-anchor=\"middle\">" << escape(opt.title) << "</text>\n";
      ty += 1.3 * fs;
    }
    if (opt.normalized_stress) {
      out << "<text x=\"" << num(vx + 0.5 * vw) << "\" y=\"" << num(ty) << "\" font-size=\"" << num(0.8 * fs)
          << "\" font-family=\"sans-serif\" text-anchor=\"middle\">normalized stress " << num(*opt.normalized_stress)
          << "</text>\n";
    }
  }
  if (opt.edges) {
    out << "<g stroke=\"#999999\" stroke-opacity=\"0.5\" stroke-width=\"" << num(0.15 * r) << "\">\n";
    for (auto [u, v] : opt.edges->edges())
      out << "<line x1=\"" << num(px(u)) << "\" y1=\"" << num(py(u)) << "\" x2=\"" << num(px(v)) << "\" y2=\""
          << num(py(v)) << "\"/>\n";
    out << "</g>\n";
  }
  out << "<g stroke=\"black\" stroke-width=\"" << num(0.1 * r) << "\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const int label = opt.labels.empty() ? 0 : opt.labels[i];
    const char* colour = kPalette[static_cast<std::size_t>(label < 0 ? -label : label) % kPalette.size()];
    out << "<circle cx=\"" << num(px(i)) << "\" cy=\"" << num(py(i)) << "\" r=\"" << num(r) << "\" fill=\"" << colour
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace kkmds
