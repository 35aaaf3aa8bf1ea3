// Copyright 2026 The pathfollow Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathfollow/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>

#include "pathfollow/error.hpp"

namespace pathfollow::svg {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};

// Fixed 3-decimal output keeps plots byte-stable and small.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
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

struct Extent {
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  void add(Point2 p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
};

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string polyline(const std::vector<Point2>& pts, const char* color) {
  std::string out = "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                    "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(pts[i].x) + "," + num(pts[i].y);
  }
  return out + "\"/>\n";
}

}  // namespace

std::string path_plot(const Path& path, std::span<const std::vector<Point2>> trajectories,
                      double canvas) {
  Extent ext;
  for (Point2 p : path.waypoints()) ext.add(p);
  for (const auto& t : trajectories) {
    for (Point2 p : t) {
      if (p.finite()) ext.add(p);
    }
  }
  const double margin = 20.0;
  const double span = std::max({ext.hi.x - ext.lo.x, ext.hi.y - ext.lo.y, 1e-9});
  const double scale = (canvas - 2.0 * margin) / span;
  auto map = [&](Point2 p) {
    return Point2{margin + (p.x - ext.lo.x) * scale, canvas - margin - (p.y - ext.lo.y) * scale};
  };

  std::string out = header(canvas, canvas);
  out += "<title>" + escape(path.id()) + "</title>\n";
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    std::vector<Point2> pts;
    pts.reserve(trajectories[i].size());
    for (Point2 p : trajectories[i]) {
      if (p.finite()) pts.push_back(map(p));
    }
    out += polyline(pts, kPalette[i % std::size(kPalette)]);
  }
  for (Point2 w : path.waypoints()) {
    const Point2 p = map(w);
    out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\" r=\"3\" fill=\"black\"/>\n";
  }
  return out + "</svg>\n";
}

std::string line_plot(std::span<const Series> series, const std::string& x_label,
                      const std::string& y_label, const std::string& title) {
  Extent ext;
  for (const auto& s : series) {
    for (Point2 p : s.points) {
      if (p.finite()) ext.add(p);
    }
  }
  if (!(ext.lo.x <= ext.hi.x)) {
    throw Error(ErrorKind::kInvalidArgument, "line plot has no finite points");
  }
  if (ext.hi.x == ext.lo.x) ext.hi.x += 1.0;
  if (ext.hi.y == ext.lo.y) ext.hi.y += std::max(1e-12, std::abs(ext.hi.y) * 0.1);
  const double w = 640.0, h = 420.0, left = 80.0, right = 20.0, top = 40.0, bottom = 60.0;
  auto map = [&](Point2 p) {
    return Point2{left + (p.x - ext.lo.x) / (ext.hi.x - ext.lo.x) * (w - left - right),
                  h - bottom - (p.y - ext.lo.y) / (ext.hi.y - ext.lo.y) * (h - top - bottom)};
  };
  auto text = [](double x, double y, const std::string& s, const char* anchor) {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"12\" text-anchor=\"" +
           anchor + "\">" + escape(s) + "</text>\n";
  };
  auto tick = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return std::string(buf);
  };

  std::string out = header(w, h);
  out += text(w / 2.0, 20.0, title, "middle");
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(h - bottom) + "\" x2=\"" +
         num(w - right) + "\" y2=\"" + num(h - bottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(h - bottom) + "\" stroke=\"black\"/>\n";
  out += text(left, h - bottom + 16.0, tick(ext.lo.x), "middle");
  out += text(w - right, h - bottom + 16.0, tick(ext.hi.x), "middle");
  out += text(left - 6.0, h - bottom, tick(ext.lo.y), "end");
  out += text(left - 6.0, top + 4.0, tick(ext.hi.y), "end");
  out += text(w / 2.0, h - 15.0, x_label, "middle");
  out += text(15.0, h / 2.0, y_label, "middle");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::vector<Point2> pts;
    for (Point2 p : series[i].points) {
      if (p.finite()) pts.push_back(map(p));
    }
    out += polyline(pts, color);
    for (Point2 p : pts) {
      out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"3\" fill=\"" +
             color + "\"/>\n";
    }
    out += text(w - right - 4.0, top + 14.0 * static_cast<double>(i + 1), series[i].label, "end");
  }
  return out + "</svg>\n";
}

}  // namespace pathfollow::svg
