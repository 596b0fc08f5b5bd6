#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stieltjes/bounds.hpp"
#include "stieltjes/core.hpp"

namespace stieltjes::cli {

enum class Format { csv, json, svg };

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  std::string command;
  std::optional<double> alpha;
  double alpha_min = 1.0;
  double alpha_max = 300.0;
  double step = 1.0;
  double a = 1.0;
  int k = 1;
  std::optional<int> m;
  std::optional<int> v;
  std::optional<double> tol;
  std::string out;  // empty: stdout (plot: "bound_comparison")
  Format format = Format::csv;
  std::string suite = "all";
  int verbosity = 0;

  /// Throws ConfigError naming the offending parameter.
  void validate() const;
  /// The single alpha, or alpha_min, alpha_min + step, ... <= alpha_max.
  std::vector<double> alpha_grid() const;
  core::EmConfig em_config() const;
};

std::optional<Format> parse_format(std::string_view s);

/// Worker count: hardware concurrency, capped by STIELTJES_THREADS when set.
std::size_t thread_count();

/// Runs body(i) for i in [0, n); exceptions are rethrown on the caller's thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// ---- emitted rows ----

struct ComputeRow {
  double alpha = 0.0;
  double a = 1.0;
  core::StieltjesResult result;
};

inline constexpr std::string_view kSchemaLine = "# schema=1";
inline constexpr std::string_view kComputeHeader = "alpha,a,c_value,gamma_re,gamma_im,err_bound";
inline constexpr std::string_view kPathHeader = "segment_kind,re,im,re_h,im_h";

std::string bounds_header();
std::string plot_header();

void write_compute_csv(const std::vector<ComputeRow>& rows, std::ostream& out);
void write_compute_json(const std::vector<ComputeRow>& rows, std::ostream& out);
void write_bounds_csv(const std::vector<bounds::BoundRow>& rows, std::ostream& out);
void write_bounds_json(const std::vector<bounds::BoundRow>& rows, std::ostream& out);

/// Plot data: bounds at a = 1 on the grid, measured log10|C_alpha(a)| per a (NaN where absent).
struct PlotData {
  std::vector<double> alpha;
  std::vector<bounds::BoundRow> rows;
  std::vector<double> a_values;
  std::vector<std::string> a_labels;
  std::vector<std::vector<double>> measured;  // [a index][alpha index]
};

inline constexpr double kMeasuredCap = 60.0;

PlotData plot_data(const std::vector<double>& grid, double measured_cap = kMeasuredCap,
                   const core::EmConfig& cfg = {});
void write_plot_csv(const PlotData& data, std::ostream& out);
void write_plot_svg(const PlotData& data, std::ostream& out);

// ---- verification ----

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  bool hard = true;  // informational checks never fail a run
  double measured = 0.0;
  double limit = 0.0;
  std::string detail;
};

inline constexpr std::string_view kSuites[] = {"w0",     "lemma_t", "sine",    "monotone", "p3",
                                               "contour", "sbound",  "theorem"};

/// Runs one suite, or every suite for "all". Unknown names throw ConfigError.
std::vector<Check> run_suite(std::string_view name);

// ---- commands ----

int cmd_compute(const RunConfig& cfg, std::ostream& out);
int cmd_bounds(const RunConfig& cfg, std::ostream& out);
int cmd_saddle(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_plot(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command and maps exceptions to exit codes, writing diagnostics to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace stieltjes::cli
