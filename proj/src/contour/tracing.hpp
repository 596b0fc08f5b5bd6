#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "stieltjes/contour.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::contour::detail {

/// Achievable accuracy of Im h near y: relative part plus rounding of the large terms.
double level_tolerance(const PhaseContext& ctx, ComplexPoint y, double level);

/// Newton projection of y onto Im h = level, orthogonal to the level line.
bool correct(const PhaseContext& ctx, ComplexPoint& y, double level);

/// Unit steepest-descent direction leaving the saddle w; sign selects the half.
ComplexPoint saddle_direction(const PhaseContext& ctx, ComplexPoint w, int sign);

/// h(y) - h(w), by Taylor expansion about w when y is close.
ComplexPoint h_delta(const PhaseContext& ctx, ComplexPoint w, ComplexPoint y);

/// Predictor-corrector walk along Im h = level. The predictor follows
/// +-conj(h'), keeping the orientation of the previous step. `stop` sees each
/// accepted node and returns true to end the walk.
template <class Stop>
std::vector<ComplexPoint> trace(const PhaseContext& ctx, double level, ComplexPoint start, ComplexPoint dir,
                                double step, Stop&& stop, int max_nodes = 400000) {
  std::vector<ComplexPoint> nodes{start};
  ComplexPoint y = start;
  for (int n = 0; n < max_nodes; ++n) {
    double len = std::min(step, 0.2 * std::abs(y));
    ComplexPoint next;
    for (;;) {
      next = y + dir * len;
      if (correct(ctx, next, level) && std::abs(next - y) <= 2.0 * len) break;
      len *= 0.5;
      if (len < 1e-12) throw TracingError("level line lost: corrector diverged", y);
    }
    ComplexPoint t = std::conj(h_prime(ctx, next));
    if (std::abs(t) > 0.0) {
      t /= std::abs(t);
      if ((t * std::conj(dir)).real() < 0.0) t = -t;
      dir = t;
    }
    y = next;
    nodes.push_back(y);
    if (stop(y)) return nodes;
  }
  throw TracingError("level line tracing exceeded node budget", y);
}

}  // namespace stieltjes::contour::detail
