#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "evogame/io.hpp"

namespace evogame {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 160, kTop = 40, kBottom = 56;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string tick_label(double v) {
  if (std::abs(v) < 1e-12) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
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

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void widen_if_flat() {
    if (hi - lo <= 0) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

std::string render_chart_svg(const ChartSpec& spec) {
  if (spec.series.empty()) throw ValidationError("chart has no series");
  Range xr, yr;
  for (const ChartSeries& s : spec.series) {
    if (s.points.empty()) throw ValidationError("chart series '" + s.name + "' is empty");
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        throw ValidationError("chart series '" + s.name + "' has a non-finite value");
      }
      xr.add(x);
      yr.add(y);
    }
  }
  xr.widen_if_flat();
  yr.widen_if_flat();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) +
         "\" height=\"" + fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " +
         fixed(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
         "\" fill=\"white\"/>\n";
  out += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(spec.title) + "</text>\n";

  // Axes and ticks.
  out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" +
         fixed(kLeft + plot_w) + "\" y2=\"" + fixed(kTop + plot_h) + "\"/>\n";
  out += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) +
         "\" y2=\"" + fixed(kTop + plot_h) + "\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double tx = px(xr.lo + (xr.hi - xr.lo) * i / kTicks);
    const double ty = py(yr.lo + (yr.hi - yr.lo) * i / kTicks);
    out += "<line x1=\"" + fixed(tx) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" + fixed(tx) +
           "\" y2=\"" + fixed(kTop + plot_h + 5) + "\"/>\n";
    out += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(ty) + "\" x2=\"" + fixed(kLeft) +
           "\" y2=\"" + fixed(ty) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<g fill=\"black\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    out += "<text x=\"" + fixed(px(xv)) + "\" y=\"" + fixed(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
    out += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(py(yv) + 4) +
           "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
  }
  out += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" + fixed(kHeight - 14) +
         "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
  out += "<text x=\"18\" y=\"" + fixed(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fixed(kTop + plot_h / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
  out += "</g>\n";

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const ChartSeries& s = spec.series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (k) out += ' ';
      out += fixed(px(s.points[k].first)) + "," + fixed(py(s.points[k].second));
    }
    out += "\"/>\n";
  }

  // Legend.
  out += "<g class=\"legend\">\n";
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const double ly = kTop + 10 + 20 * static_cast<double>(i);
    const double lx = kLeft + plot_w + 16;
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(ly) + "\" x2=\"" + fixed(lx + 24) +
           "\" y2=\"" + fixed(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fixed(lx + 30) + "\" y=\"" + fixed(ly + 4) + "\">" +
           escape(spec.series[i].name) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

ChartSpec trajectory_chart(const Trajectory& traj, std::string title, std::size_t max_points) {
  ChartSpec spec;
  spec.title = std::move(title);
  spec.x_label = "t";
  spec.y_label = "probability";
  const std::size_t n = traj.samples.size();
  const std::size_t stride = std::max<std::size_t>(1, (n + max_points - 1) / std::max<std::size_t>(1, max_points));
  for (Coordinate c : {Coordinate::kX, Coordinate::kY, Coordinate::kZ}) {
    ChartSeries s;
    s.name = std::string(coordinate_name(c));
    for (std::size_t i = 0; i < n; i += stride) {
      s.points.emplace_back(traj.samples[i].t, coordinate(traj.samples[i].state, c));
    }
    if (n > 0 && (n - 1) % stride != 0) {
      s.points.emplace_back(traj.samples.back().t, coordinate(traj.samples.back().state, c));
    }
    spec.series.push_back(std::move(s));
  }
  return spec;
}

}  // namespace evogame
