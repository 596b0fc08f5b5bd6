#include <cmath>
#include <numbers>

#include "stieltjes/contour.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::contour {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr ComplexPoint kI{0.0, 1.0};
}  // namespace

PhaseContext make_context(int k, double alpha, double a) {
  if (k < 1) throw DomainError("PhaseContext: k must be >= 1");
  if (!std::isfinite(alpha) || alpha < 1.0) throw DomainError("PhaseContext: alpha must be >= 1");
  if (!std::isfinite(a) || a <= 0.0 || a > 1.0) throw DomainError("PhaseContext: a must lie in (0, 1]");
  return {k, alpha, a, std::log1p(a)};
}

ComplexPoint h(const PhaseContext& ctx, ComplexPoint y) {
  if (y == 0.0) throw DomainError("h: singular at y = 0");
  return kTwoPi * ctx.k * kI * (std::exp(y) - ctx.a) + ctx.alpha * std::log(y);
}

ComplexPoint h_prime(const PhaseContext& ctx, ComplexPoint y) {
  if (y == 0.0) throw DomainError("h': singular at y = 0");
  return kTwoPi * ctx.k * kI * std::exp(y) + ctx.alpha / y;
}

ComplexPoint h_second(const PhaseContext& ctx, ComplexPoint y) {
  if (y == 0.0) throw DomainError("h'': singular at y = 0");
  return kTwoPi * ctx.k * kI * std::exp(y) - ctx.alpha / (y * y);
}

ComplexPoint q(const PhaseContext& ctx, ComplexPoint y, int v) {
  if (y == 0.0) throw DomainError("q: singular at y = 0");
  const auto c = core::deriv_coeffs(v, ctx.alpha);
  const ComplexPoint inv = 1.0 / y;
  ComplexPoint acc = c.coeffs[v];
  for (int j = v - 1; j >= 0; --j) acc = acc * inv + c.coeffs[j];
  return acc;
}

ComplexPoint saddle(const PhaseContext& ctx) {
  return special::lambert_w0({0.0, ctx.alpha / (kTwoPi * ctx.k)});
}

std::string_view segment_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::real_axis:
      return "real_axis";
    case SegmentKind::unit_arc:
      return "unit_arc";
    case SegmentKind::level_line:
      return "level_line";
    case SegmentKind::tail:
      return "tail";
  }
  return "unknown";
}

}  // namespace stieltjes::contour
