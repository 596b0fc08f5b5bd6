#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "stieltjes/cli.hpp"

namespace stieltjes::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// 17 significant digits; non-finite values leave the cell empty
std::string num(double x) { return std::isfinite(x) ? fmt::format("{:.17g}", x) : std::string(); }

nlohmann::json jnum(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

double valid_log10(const bounds::LogBound& b) { return b.valid ? b.log10_value : kNaN; }

}  // namespace

std::string bounds_header() {
  std::string h = "alpha,a";
  for (auto f : bounds::kAllFamilies) {
    const auto name = bounds::family_name(f);
    h += fmt::format(",{}_log10,{}_valid", name, name);
  }
  h += ",measured_log10,measured_err,measured_method,fps_floor_log10,fps_ceil_log10,fps_neighbors_close";
  return h;
}

std::string plot_header() {
  std::string h = "alpha";
  for (auto f : bounds::kAllFamilies) h += fmt::format(",{}", bounds::family_name(f));
  h += ",measured_a1,measured_a2_3,measured_a1_3,measured_a1_10";
  return h;
}

void write_compute_csv(const std::vector<ComputeRow>& rows, std::ostream& out) {
  out << kSchemaLine << '\n' << kComputeHeader << '\n';
  for (const auto& r : rows) {
    out << num(r.alpha) << ',' << num(r.a) << ',' << num(r.result.c_value) << ',' << num(r.result.gamma_value.real())
        << ',' << num(r.result.gamma_value.imag()) << ',' << num(r.result.err_bound) << '\n';
  }
}

void write_compute_json(const std::vector<ComputeRow>& rows, std::ostream& out) {
  nlohmann::json doc = {{"schema", 1}, {"rows", nlohmann::json::array()}};
  for (const auto& r : rows) {
    doc["rows"].push_back({{"alpha", r.alpha},
                           {"a", r.a},
                           {"c_value", jnum(r.result.c_value)},
                           {"gamma_re", jnum(r.result.gamma_value.real())},
                           {"gamma_im", jnum(r.result.gamma_value.imag())},
                           {"err_bound", jnum(r.result.err_bound)},
                           {"method", std::string(core::method_name(r.result.method_used))},
                           {"m", r.result.config_used.m},
                           {"v", r.result.config_used.v},
                           {"fourier_terms", r.result.fourier_terms}});
  }
  out << doc.dump(2) << '\n';
}

void write_bounds_csv(const std::vector<bounds::BoundRow>& rows, std::ostream& out) {
  out << kSchemaLine << '\n' << bounds_header() << '\n';
  for (const auto& r : rows) {
    out << num(r.alpha) << ',' << num(r.a);
    for (const auto& b : r.bounds) out << ',' << num(valid_log10(b)) << ',' << (b.valid ? 1 : 0);
    out << ',' << num(r.measured_log10.value_or(kNaN)) << ',' << (r.measured_log10 ? num(r.measured_err) : "") << ','
        << r.measured_method << ',' << num(r.fps_floor_log10) << ',' << num(r.fps_ceil_log10) << ','
        << (r.fps_neighbors_close ? 1 : 0) << '\n';
  }
}

void write_bounds_json(const std::vector<bounds::BoundRow>& rows, std::ostream& out) {
  nlohmann::json doc = {{"schema", 1}, {"rows", nlohmann::json::array()}};
  for (const auto& r : rows) {
    nlohmann::json fams = nlohmann::json::object();
    for (const auto& b : r.bounds) {
      fams[std::string(bounds::family_name(b.family))] = {
          {"log10", jnum(valid_log10(b))}, {"valid", b.valid}, {"reason", b.reason}};
    }
    doc["rows"].push_back({{"alpha", r.alpha},
                           {"a", r.a},
                           {"bounds", fams},
                           {"measured_log10", jnum(r.measured_log10.value_or(kNaN))},
                           {"measured_err", r.measured_log10 ? jnum(r.measured_err) : nlohmann::json(nullptr)},
                           {"measured_method", r.measured_method},
                           {"fps_floor_log10", jnum(r.fps_floor_log10)},
                           {"fps_ceil_log10", jnum(r.fps_ceil_log10)},
                           {"fps_neighbors_close", r.fps_neighbors_close}});
  }
  out << doc.dump(2) << '\n';
}

void write_plot_csv(const PlotData& data, std::ostream& out) {
  out << kSchemaLine << '\n' << plot_header() << '\n';
  for (std::size_t i = 0; i < data.alpha.size(); ++i) {
    out << num(data.alpha[i]);
    for (const auto& b : data.rows[i].bounds) out << ',' << num(valid_log10(b));
    for (const auto& series : data.measured) out << ',' << num(series[i]);
    out << '\n';
  }
}

namespace {

struct Series {
  std::string label;
  std::string color;
  bool dashed = false;
  std::vector<double> y;
};

double nice_step(double span) {
  const double raw = span / 8.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

void write_plot_svg(const PlotData& data, std::ostream& out) {
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"};
  static const char* kMeasuredColors[] = {"#000000", "#555555", "#888888", "#bbbbbb"};
  std::vector<Series> series;
  for (std::size_t f = 0; f < std::size(bounds::kAllFamilies); ++f) {
    Series s{std::string(bounds::family_name(bounds::kAllFamilies[f])), kColors[f], false, {}};
    for (const auto& row : data.rows) s.y.push_back(valid_log10(row.bounds[f]));
    series.push_back(std::move(s));
  }
  for (std::size_t j = 0; j < data.measured.size(); ++j) {
    series.push_back({"|C| a=" + data.a_labels[j], kMeasuredColors[j % 4], true, data.measured[j]});
  }

  double x_lo = data.alpha.empty() ? 0.0 : data.alpha.front();
  double x_hi = data.alpha.empty() ? 1.0 : data.alpha.back();
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  double y_lo = std::numeric_limits<double>::infinity(), y_hi = -y_lo;
  for (const auto& s : series) {
    for (double y : s.y) {
      if (std::isfinite(y)) {
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
      }
    }
  }
  if (!std::isfinite(y_lo)) y_lo = 0.0, y_hi = 1.0;
  const double y_step = nice_step(std::max(1.0, y_hi - y_lo));
  y_lo = std::floor(y_lo / y_step) * y_step;
  y_hi = std::ceil(y_hi / y_step) * y_step;
  if (y_hi <= y_lo) y_hi = y_lo + y_step;

  constexpr double W = 960, H = 640, L = 80, R = 200, T = 30, B = 60;
  const double pw = W - L - R, ph = H - T - B;
  auto px = [&](double x) { return L + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return T + (y_hi - y) / (y_hi - y_lo) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n", W,
      H, W, H);
  out << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  out << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", L, T, pw,
                     ph);
  for (double y = y_lo; y <= y_hi + 1e-9 * y_step; y += y_step) {
    out << fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#dddddd\"/>"
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">1e{}</text>\n",
        L, py(y), L + pw, py(y), L - 6, py(y) + 4, static_cast<long>(std::lround(y)));
  }
  const double x_step = nice_step(x_hi - x_lo);
  for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + 1e-9 * x_step; x += x_step) {
    out << fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>"
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:g}</text>\n",
        px(x), T + ph, px(x), T + ph + 5, px(x), T + ph + 20, x);
  }
  out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">alpha</text>\n", L + pw / 2, H - 15);
  out << fmt::format(
      "<text x=\"20\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2f})\">bound / |C| (log scale)"
      "</text>\n",
      T + ph / 2, T + ph / 2);

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    std::string pts;
    auto flush = [&] {
      if (!pts.empty()) {
        out << fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n", s.color,
                           s.dashed ? " stroke-dasharray=\"4 3\"" : "", pts);
      }
      pts.clear();
    };
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      pts += fmt::format("{}{:.2f},{:.2f}", pts.empty() ? "" : " ", px(data.alpha[i]), py(s.y[i]));
    }
    flush();
    const double ly = T + 10 + 18.0 * static_cast<double>(si);
    out << fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"2\"{}/>"
        "<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n",
        L + pw + 12, ly, L + pw + 40, ly, s.color, s.dashed ? " stroke-dasharray=\"4 3\"" : "", L + pw + 46, ly + 4,
        s.label);
  }
  out << "</g>\n</svg>\n";
}

}  // namespace stieltjes::cli
