#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "stieltjes/cli.hpp"
#include "stieltjes/contour.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/kernels.hpp"

namespace stieltjes::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void with_output(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigError("--out: cannot open " + path);
  fn(file);
  if (!file) throw ConfigError("--out: write failed for " + path);
}

void reject_svg(const RunConfig& cfg) {
  if (cfg.format == Format::svg) throw ConfigError("--format svg is only available for plot");
}

std::string r6(double x) { return fmt::format("{:.6g}", x); }
std::string c6(std::complex<double> z) { return fmt::format("{:.6g} {:.6g}", z.real(), z.imag()); }

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  reject_svg(cfg);
  const auto grid = cfg.alpha_grid();
  const auto em = cfg.em_config();
  std::vector<ComputeRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { rows[i] = {grid[i], cfg.a, core::c_alpha(grid[i], cfg.a, em)}; });
  with_output(cfg.out, out, [&](std::ostream& os) {
    if (cfg.format == Format::json) {
      write_compute_json(rows, os);
    } else {
      write_compute_csv(rows, os);
    }
  });
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  reject_svg(cfg);
  const auto grid = cfg.alpha_grid();
  const auto em = cfg.em_config();
  std::vector<bounds::BoundRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { rows[i] = bounds::bound_row(grid[i], cfg.a, kMeasuredCap, em); });
  with_output(cfg.out, out, [&](std::ostream& os) {
    if (cfg.format == Format::json) {
      write_bounds_json(rows, os);
    } else {
      write_bounds_csv(rows, os);
    }
  });
  return kOk;
}

int cmd_saddle(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  reject_svg(cfg);
  if (!cfg.alpha) throw ConfigError("--alpha is required for saddle");
  const auto ctx = contour::make_context(cfg.k, *cfg.alpha, cfg.a);
  const auto path = contour::build_contour(ctx);
  const auto d = contour::s_k_contour(path);
  const std::complex<double> ls[4] = {d.l1, d.l2, d.l3, d.l4};
  const double bs[4] = {d.bound_l1, d.bound_l2, d.bound_l3, d.bound_l4};

  with_output(cfg.out, out, [&](std::ostream& os) {
    if (cfg.format == Format::json) {
      nlohmann::json doc = {{"schema", 1},
                            {"k", ctx.k},
                            {"alpha", ctx.alpha},
                            {"a", ctx.a},
                            {"saddle", {path.saddle.real(), path.saddle.imag()}},
                            {"saddle_inside", path.saddle_inside},
                            {"u", {path.u.real(), path.u.imag()}},
                            {"theta_u", path.theta_u},
                            {"v", {path.v.real(), path.v.imag()}},
                            {"arc_roots", path.arc_roots},
                            {"l3_box_excursion", contour::level_line_box_excursion(path)},
                            {"s_k", {d.s_k.real(), d.s_k.imag()}},
                            {"s_bound", d.s_bound},
                            {"quad_err", d.quad_err}};
      for (int i = 0; i < 4; ++i) {
        doc["segments"].push_back({{"name", fmt::format("L{}", i + 1)},
                                   {"value", {ls[i].real(), ls[i].imag()}},
                                   {"abs", std::abs(ls[i])},
                                   {"bound", bs[i]}});
      }
      for (const auto& seg : path.segments) {
        for (const auto& y : seg.nodes) {
          const auto hv = contour::h(ctx, y);
          doc["nodes"].push_back({std::string(contour::segment_name(seg.kind)), y.real(), y.imag(), hv.real(),
                                  hv.imag()});
        }
      }
      os << doc.dump(2) << '\n';
      return;
    }
    os << kSchemaLine << '\n';
    os << fmt::format("# k={} alpha={} a={}\n", ctx.k, r6(ctx.alpha), r6(ctx.a));
    os << "# saddle " << c6(path.saddle) << '\n';
    os << "# saddle_inside " << (path.saddle_inside ? 1 : 0) << '\n';
    os << "# u " << c6(path.u) << " theta_u " << r6(path.theta_u) << '\n';
    os << "# v " << c6(path.v) << '\n';
    os << "# arc_roots";
    for (double t : path.arc_roots) os << ' ' << r6(t);
    os << '\n';
    os << "# L3_box_excursion " << r6(contour::level_line_box_excursion(path)) << '\n';
    for (int i = 0; i < 4; ++i) {
      os << fmt::format("# L{} {} |L{}| {} bound {} {}\n", i + 1, c6(ls[i]), i + 1, r6(std::abs(ls[i])), r6(bs[i]),
                        std::abs(ls[i]) <= bs[i] ? "ok" : "EXCEEDED");
    }
    os << fmt::format("# S_k {} |S_k| {} bound {} quad_err {}\n", c6(d.s_k), r6(std::abs(d.s_k)), r6(d.s_bound),
                      r6(d.quad_err));
    os << kPathHeader << '\n';
    contour::write_path_csv(path, os);
  });
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto checks = run_suite(cfg.suite);
  int failed = 0;
  for (const auto& c : checks) {
    if (c.hard && !c.passed) ++failed;
  }
  if (cfg.format == Format::json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& c : checks) {
      doc.push_back({{"suite", c.suite},
                     {"name", c.name},
                     {"passed", c.passed},
                     {"hard", c.hard},
                     {"measured", std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr)},
                     {"limit", c.limit},
                     {"detail", c.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      const char* tag = !c.hard ? "INFO" : c.passed ? "PASS" : "FAIL";
      const double margin = c.limit != 0.0 ? (c.limit - c.measured) / std::fabs(c.limit) : -c.measured;
      out << fmt::format("{} [{}] {}: measured={} limit={} margin={}", tag, c.suite, c.name, r6(c.measured),
                         r6(c.limit), c.hard ? r6(margin) : std::string("n/a"));
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
    }
    out << fmt::format("{} checks, {} failed\n", checks.size(), failed);
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

PlotData plot_data(const std::vector<double>& grid, double measured_cap, const core::EmConfig& cfg) {
  PlotData d;
  d.alpha = grid;
  d.a_values = {1.0, 2.0 / 3.0, 1.0 / 3.0, 0.1};
  d.a_labels = {"1", "2/3", "1/3", "1/10"};
  d.rows.resize(grid.size());
  d.measured.assign(d.a_values.size(), std::vector<double>(grid.size(), kNaN));
  parallel_for(grid.size(), [&](std::size_t i) { d.rows[i] = bounds::bound_row(grid[i], 1.0, -1.0); });
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t j = 0; j < d.a_values.size(); ++j) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] <= measured_cap) jobs.emplace_back(j, i);
    }
  }
  parallel_for(jobs.size(), [&](std::size_t n) {
    const auto [j, i] = jobs[n];
    const auto r = core::c_alpha(grid[i], d.a_values[j], cfg);
    const double mag = std::fabs(r.c_value);
    // points whose error bound exceeds a tenth of the value are left blank
    if (mag > 0.0 && r.err_bound < 0.1 * mag) d.measured[j][i] = std::log10(mag);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::isfinite(d.measured[0][i])) d.rows[i].measured_log10 = d.measured[0][i];
  }
  return d;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.format == Format::json) throw ConfigError("--format json is not available for plot (it writes csv and svg)");
  std::string base = cfg.out.empty() ? "bound_comparison" : cfg.out;
  for (std::string_view ext : {".svg", ".csv"}) {
    if (base.size() > ext.size() && base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
      base.resize(base.size() - ext.size());
    }
  }
  const auto data = plot_data(cfg.alpha_grid(), kMeasuredCap, cfg.em_config());
  with_output(base + ".csv", out, [&](std::ostream& os) { write_plot_csv(data, os); });
  with_output(base + ".svg", out, [&](std::ostream& os) { write_plot_svg(data, os); });
  out << fmt::format("wrote {}.csv ({} rows) and {}.svg\n", base, data.alpha.size(), base);
  return kOk;
}

namespace {

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "compute") return cmd_compute(cfg, out);
    if (cfg.command == "bounds") return cmd_bounds(cfg, out);
    if (cfg.command == "saddle") return cmd_saddle(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "plot") return cmd_plot(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContourConstructionError& e) {
    err << "numerical failure: " << e.what() << " (arc scan of " << e.scan_theta().size() << " points)\n";
    return kNumerical;
  } catch (const TracingError& e) {
    const auto p = e.last_good_node();
    err << "numerical failure: " << e.what() << " (last good node " << p.real() << ' ' << p.imag() << ")\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.verbosity <= 0) return dispatch(cfg, out, err);
  err << fmt::format("stieltjes {}: {} thread(s), {} kernels\n", cfg.command, thread_count(),
                     kernels::isa_name(kernels::active_isa()));
  const auto t0 = std::chrono::steady_clock::now();
  const int code = dispatch(cfg, out, err);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  err << fmt::format("stieltjes {}: exit {} after {:.2f} s\n", cfg.command, code, dt.count());
  return code;
}

}  // namespace stieltjes::cli
