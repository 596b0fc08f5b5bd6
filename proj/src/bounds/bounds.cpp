#include "stieltjes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stieltjes/errors.hpp"
#include "stieltjes/special_functions.hpp"

namespace stieltjes::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn10 = std::numbers::ln10;

LogBound make(Family f, double alpha, double ln_value) {
  LogBound b;
  b.family = f;
  b.alpha = alpha;
  b.log10_value = ln_value / kLn10;
  b.valid = std::isfinite(b.log10_value);
  if (!b.valid) b.reason = "non-finite value";
  return b;
}

LogBound invalid(Family f, double alpha, std::string reason) {
  LogBound b;
  b.family = f;
  b.alpha = alpha;
  b.log10_value = std::numeric_limits<double>::quiet_NaN();
  b.valid = false;
  b.reason = std::move(reason);
  return b;
}

// log(e^x + e^y) with the larger exponent factored out
double log_add(double x, double y) {
  const double hi = std::max(x, y), lo = std::min(x, y);
  return hi + std::log1p(std::exp(lo - hi));
}

double round_half_even(double x) { return std::nearbyint(x); }

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::berndt:
      return "berndt";
    case Family::williams_zhang:
      return "williams_zhang";
    case Family::matsuoka:
      return "matsuoka";
    case Family::saad_eddin:
      return "saad_eddin";
    case Family::fps:
      return "fps";
    case Family::conjecture:
      return "conjecture";
    case Family::theorem:
      return "theorem";
  }
  return "unknown";
}

LogBound berndt(int m) {
  if (m < 1) throw DomainError("berndt: m must be >= 1");
  const double sign_term = m % 2 == 0 ? 4.0 : 2.0;
  return make(Family::berndt, m, std::log(sign_term) + special::log_gamma(m) - m * std::log(kPi));
}

LogBound williams_zhang(int m) {
  if (m < 1) throw DomainError("williams_zhang: m must be >= 1");
  const double sign_term = m % 2 == 0 ? 4.0 : 2.0;
  return make(Family::williams_zhang, m,
              std::log(sign_term) + special::log_gamma(2.0 * m + 1.0) - (m + 1.0) * std::log(m) -
                  m * std::log(2.0 * kPi));
}

LogBound matsuoka(int m) {
  if (m <= 4) return invalid(Family::matsuoka, m, "requires m>4");
  LogBound b = make(Family::matsuoka, m, 0.0);
  b.log10_value = -4.0 + m * std::log10(std::log(static_cast<double>(m)));
  return b;
}

double saad_eddin_theta(int m) { return (m + 1.0) / std::log(2.0 * (m + 1.0) / kPi) - 1.0; }

LogBound saad_eddin(int m, SaadEddinExponent exponent) {
  if (m < 0) throw DomainError("saad_eddin: m must be >= 0");
  const double theta = saad_eddin_theta(m);
  if (!(theta > 1.0)) return invalid(Family::saad_eddin, m, "requires theta(m)>1");
  const double power = exponent == SaadEddinExponent::m_plus_one ? m + 1.0 : static_cast<double>(m);
  const double ln = special::log_gamma(m + 1.0) + std::log(2.0 * std::numbers::sqrt2) - power * std::log(theta) +
                    theta * (std::log(theta) + std::log(2.0 / (kPi * std::numbers::e))) +
                    std::log1p(std::exp2(-theta - 1.0) * (theta + 1.0) / (theta - 1.0));
  return make(Family::saad_eddin, m, ln);
}

FpsChoice fps_choice(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("fps_bound: alpha must be > 0");
  const double w = special::lambert_w0({2.0 * (alpha + 1.0) / kPi, 0.0}).real();
  FpsChoice c;
  c.x = kPi / 2.0 * std::exp(w);
  c.x_below_alpha = c.x < alpha;
  c.n = fps_index(alpha, c.x);
  return c;
}

int fps_index(double alpha, double x) {
  const int n = static_cast<int>(x < alpha ? round_half_even(x) : std::ceil(alpha - 1.0));
  return std::max(n, 0);
}

LogBound fps_bound_with_n(double alpha, int n) {
  if (!(alpha > 0.0)) throw DomainError("fps_bound: alpha must be > 0");
  if (n < 0) throw DomainError("fps_bound: n must be >= 0");
  const double sign_term = (n + 1) % 2 == 0 ? 4.0 : 2.0;
  const double np1 = n + 1.0;
  const double ln = std::log(sign_term) + special::log_gamma(alpha + 1.0) - np1 * std::log(2.0 * kPi) -
                    (alpha + 1.0) * std::log(np1) + special::log_gamma(2.0 * np1 + 1.0) - special::log_gamma(np1 + 1.0);
  return make(Family::fps, alpha, ln);
}

LogBound fps_bound(double alpha) { return fps_bound_with_n(alpha, fps_choice(alpha).n); }

double saddle_exponent(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("saddle_exponent: alpha must be > 0");
  const ComplexPoint w = special::lambert_w0({0.0, alpha / (2.0 * kPi)});
  return alpha * (std::log(w) - 1.0 / w).real();
}

LogBound conjecture_bound(double alpha) {
  return make(Family::conjecture, alpha, std::log(2.0) + saddle_exponent(alpha));
}

LogBound theorem_bound(double alpha) {
  if (!(alpha > 1.0)) return invalid(Family::theorem, alpha, "requires alpha>=2pi");
  const double la = std::log(alpha);
  const double first = 2.0 * la;
  const double second = std::log(0.75) + 2.0 * la + std::log(la) + saddle_exponent(alpha);
  LogBound b = make(Family::theorem, alpha, log_add(first, second));
  if (alpha < 2.0 * kPi) {
    b.valid = false;
    b.reason = "requires alpha>=2pi";
  }
  return b;
}

LogBound evaluate(Family f, double alpha, double a) {
  LogBound b;
  const bool integral = is_integer(alpha);
  const int m = integral ? static_cast<int>(alpha) : 0;
  switch (f) {
    case Family::berndt:
    case Family::williams_zhang:
    case Family::matsuoka:
    case Family::saad_eddin:
      if (!integral) {
        b = invalid(f, alpha, "defined for integer m only");
      } else if (m < 1) {
        b = invalid(f, alpha, "requires m>=1");
      } else if (f == Family::berndt) {
        b = berndt(m);
      } else if (f == Family::williams_zhang) {
        b = williams_zhang(m);
      } else if (f == Family::matsuoka) {
        b = matsuoka(m);
      } else {
        b = saad_eddin(m);
      }
      break;
    case Family::fps:
      b = alpha > 0.0 ? fps_bound(alpha) : invalid(f, alpha, "requires alpha>0");
      break;
    case Family::conjecture:
      b = alpha > 0.0 ? conjecture_bound(alpha) : invalid(f, alpha, "requires alpha>0");
      break;
    case Family::theorem:
      b = theorem_bound(alpha);
      break;
  }
  b.a = a;
  return b;
}

BoundRow bound_row(double alpha, double a, double measured_cap, const core::EmConfig& cfg) {
  BoundRow row;
  row.alpha = alpha;
  row.a = a;
  for (Family f : kAllFamilies) row.bounds.push_back(evaluate(f, alpha, a));
  if (alpha > 0.0) {
    const auto choice = fps_choice(alpha);
    row.fps_floor_log10 = fps_bound_with_n(alpha, static_cast<int>(std::floor(choice.x))).log10_value;
    row.fps_ceil_log10 = fps_bound_with_n(alpha, static_cast<int>(std::ceil(choice.x))).log10_value;
  }
  if (alpha <= measured_cap) {
    const auto r = core::c_alpha(alpha, a, cfg);
    const double mag = std::fabs(r.c_value);
    if (mag > 0.0) row.measured_log10 = std::log10(mag);
    row.measured_err = r.err_bound;
    row.measured_method = std::string(core::method_name(r.method_used));
    if (row.measured_log10) {
      for (double nb : {row.fps_floor_log10, row.fps_ceil_log10}) {
        if (std::fabs(std::pow(10.0, nb - *row.measured_log10) - 1.0) <= 0.1) row.fps_neighbors_close = true;
      }
    }
  }
  return row;
}

std::vector<BoundRow> bound_table(const std::vector<double>& alpha_grid, double a, double measured_cap,
                                  const core::EmConfig& cfg) {
  std::vector<BoundRow> rows;
  rows.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) rows.push_back(bound_row(alpha, a, measured_cap, cfg));
  return rows;
}

}  // namespace stieltjes::bounds
