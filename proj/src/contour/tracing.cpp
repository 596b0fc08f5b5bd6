#include "tracing.hpp"

#include <algorithm>
#include <numbers>

namespace stieltjes::contour {

namespace detail {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double level_tolerance(const PhaseContext& ctx, ComplexPoint y, double level) {
  const double big = kTwoPi * ctx.k * (std::exp(y.real()) + ctx.a) + ctx.alpha * (std::fabs(std::log(std::abs(y))) + 2.0);
  return 1e-12 * std::max(1.0, std::fabs(level)) + 16.0 * kEps * big;
}

bool correct(const PhaseContext& ctx, ComplexPoint& y, double level) {
  const double tol = level_tolerance(ctx, y, level);
  for (int it = 0; it < 30; ++it) {
    if (y == 0.0 || !std::isfinite(y.real()) || !std::isfinite(y.imag())) return false;
    const double r = h(ctx, y).imag() - level;
    if (std::fabs(r) <= tol) return true;
    const ComplexPoint d = h_prime(ctx, y);
    if (std::abs(d) == 0.0) return false;
    y += ComplexPoint(0.0, -r) / d;
  }
  return false;
}

ComplexPoint saddle_direction(const PhaseContext& ctx, ComplexPoint w, int sign) {
  ComplexPoint d = std::sqrt(-std::conj(h_second(ctx, w)));
  d /= std::abs(d);
  return sign >= 0 ? d : -d;
}

ComplexPoint h_delta(const PhaseContext& ctx, ComplexPoint w, ComplexPoint y) {
  const ComplexPoint delta = y - w;
  if (std::abs(delta) > 0.25 * std::abs(w)) return h(ctx, y) - h(ctx, w);
  // h^(n)(w) = 2 pi i k e^w + (-1)^{n-1} (n-1)! alpha / w^n
  const ComplexPoint e = kTwoPi * ctx.k * ComplexPoint(0.0, 1.0) * std::exp(w);
  const ComplexPoint r = delta / w;
  ComplexPoint exp_part = 0.0;
  ComplexPoint dn = 1.0;
  double fact = 1.0;
  for (int n = 1; n <= 40; ++n) {
    dn *= delta;
    fact *= n;
    exp_part += dn / fact;
  }
  // alpha log(1 + r) = alpha sum (-1)^{n-1} r^n / n
  ComplexPoint log_part = 0.0;
  ComplexPoint rn = 1.0;
  for (int n = 1; n <= 60; ++n) {
    rn *= r;
    log_part += (n % 2 == 1 ? 1.0 : -1.0) * rn / static_cast<double>(n);
  }
  return e * exp_part + ctx.alpha * log_part;
}

}  // namespace detail

std::vector<ComplexPoint> trace_level_line(const PhaseContext& ctx, ComplexPoint start, double re_stop, double step) {
  if (!(step > 0.0)) throw ConfigError("trace_level_line: step must be > 0");
  const ComplexPoint w = saddle(ctx);
  const double level = h(ctx, w).imag();
  const double off = std::fabs(h(ctx, start).imag() - level);
  if (off > std::max(1e-8, detail::level_tolerance(ctx, start, level))) {
    throw DomainError("trace_level_line: start is not on the saddle's level line");
  }
  if (start.real() >= re_stop) return {start};
  ComplexPoint dir;
  if (std::abs(start - w) <= 1e-12 * std::max(1.0, std::abs(w))) {
    dir = detail::saddle_direction(ctx, w, 1);
    if (dir.real() < 0.0) dir = -dir;
  } else {
    dir = std::conj(h_prime(ctx, start));
    dir /= std::abs(dir);
    if (dir.real() < 0.0) dir = -dir;
  }
  auto nodes = detail::trace(ctx, level, start, dir, step, [&](ComplexPoint y) {
    if (std::abs(y) < 1e-6) throw TracingError("trace_level_line: walked into the origin", y);
    return y.real() >= re_stop;
  });
  return nodes;
}

DescentHalf::DescentHalf(PhaseContext ctx, ComplexPoint w, ComplexPoint direction, std::vector<ComplexPoint> nodes)
    : ctx_(ctx), w_(w), direction_(direction), nodes_(std::move(nodes)) {
  local_scale_ = std::sqrt(2.0 / std::abs(h_second(ctx_, w_)));
  s_.reserve(nodes_.size());
  double prev = 0.0;
  for (const auto& y : nodes_) {
    const double d = -detail::h_delta(ctx_, w_, y).real();
    prev = std::max(prev, std::sqrt(std::max(0.0, d)));
    s_.push_back(prev);
  }
}

double DescentHalf::s_of(ComplexPoint y) const {
  return std::sqrt(std::max(0.0, -detail::h_delta(ctx_, w_, y).real()));
}

std::pair<ComplexPoint, ComplexPoint> DescentHalf::point(double s) const {
  if (s <= 0.0) return {w_, direction_ * local_scale_};
  ComplexPoint y;
  if (nodes_.size() < 2 || s <= s_[1]) {
    y = w_ + direction_ * local_scale_ * s;
  } else {
    auto it = std::upper_bound(s_.begin(), s_.end(), s);
    std::size_t hi = it == s_.end() ? s_.size() - 1 : static_cast<std::size_t>(it - s_.begin());
    std::size_t lo = hi - 1;
    const double span = s_[hi] - s_[lo];
    const double t = span > 0.0 ? std::clamp((s - s_[lo]) / span, 0.0, 1.0) : 0.0;
    y = nodes_[lo] + t * (nodes_[hi] - nodes_[lo]);
  }
  const double target = -s * s;
  double last = 0.0;
  for (int it = 0; it < 60; ++it) {
    const ComplexPoint f = detail::h_delta(ctx_, w_, y) - target;
    const ComplexPoint step = f / h_prime(ctx_, y);
    y -= step;
    last = std::abs(step);
    if (last <= 1e-14 * std::max(1.0, std::abs(y))) break;
  }
  if (last <= 1e-10 * std::max(1.0, std::abs(y))) return {y, -2.0 * s / h_prime(ctx_, y)};
  throw QuadratureError("level_line", "Newton on h(y) = h(w) - s^2 did not converge at s = " + std::to_string(s));
}

}  // namespace stieltjes::contour
