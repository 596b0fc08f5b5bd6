#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stieltjes/core.hpp"

namespace stieltjes::bounds {

enum class Family { berndt, williams_zhang, matsuoka, saad_eddin, fps, conjecture, theorem };

inline constexpr Family kAllFamilies[] = {Family::berndt,     Family::williams_zhang, Family::matsuoka,
                                          Family::saad_eddin, Family::fps,            Family::conjecture,
                                          Family::theorem};

std::string_view family_name(Family f);

/// A bound on |C_alpha(a)| held as log10 of its value.
struct LogBound {
  Family family = Family::berndt;
  double log10_value = 0.0;
  bool valid = false;
  std::string reason;  // empty when valid
  double alpha = 0.0;
  double a = 1.0;
};

LogBound berndt(int m);
LogBound williams_zhang(int m);
LogBound matsuoka(int m);

/// Which power of theta multiplies the leading exponential.
enum class SaadEddinExponent { m_plus_one, m };

double saad_eddin_theta(int m);
LogBound saad_eddin(int m, SaadEddinExponent exponent = SaadEddinExponent::m_plus_one);

struct FpsChoice {
  double x = 0.0;
  int n = 0;
  bool x_below_alpha = false;
};

/// x = (pi/2) e^{W0(2(alpha+1)/pi)}; n = round-half-even(x) if x < alpha, else ceil(alpha - 1).
FpsChoice fps_choice(double alpha);
/// The index rule alone, for a given x.
int fps_index(double alpha, double x);
LogBound fps_bound(double alpha);
LogBound fps_bound_with_n(double alpha, int n);

/// alpha Re(log w - 1/w) with w = W0(i alpha / (2 pi)).
double saddle_exponent(double alpha);

LogBound conjecture_bound(double alpha);
LogBound theorem_bound(double alpha);

LogBound evaluate(Family f, double alpha, double a = 1.0);

struct BoundRow {
  double alpha = 0.0;
  double a = 1.0;
  std::vector<LogBound> bounds;  // kAllFamilies order
  std::optional<double> measured_log10;
  double measured_err = 0.0;  // absolute error bound of |C|
  std::string measured_method;
  double fps_floor_log10 = 0.0;  // FPS bound with n = floor(x) and ceil(x)
  double fps_ceil_log10 = 0.0;
  bool fps_neighbors_close = false;  // a neighbour lies within 10% of the measured value
};

/// Evaluates every family on the grid; |C_alpha(a)| is measured for alpha <= measured_cap.
BoundRow bound_row(double alpha, double a, double measured_cap = 60.0, const core::EmConfig& cfg = {});
std::vector<BoundRow> bound_table(const std::vector<double>& alpha_grid, double a, double measured_cap = 60.0,
                                  const core::EmConfig& cfg = {});

}  // namespace stieltjes::bounds
