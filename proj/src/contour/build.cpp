#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "stieltjes/contour.hpp"
#include "tracing.hpp"

namespace stieltjes::contour {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kArcScan = 4000;

enum class HalfEnd { origin, infinity };

struct Traced {
  HalfEnd end;
  ComplexPoint direction;
  std::vector<ComplexPoint> nodes;
};

double arc_residual(const PhaseContext& ctx, double theta, double level) {
  return h(ctx, std::polar(1.0, theta)).imag() - level;
}

double refine_arc_root(const PhaseContext& ctx, double lo, double hi, double level) {
  auto g = [&](double t) { return arc_residual(ctx, t, level); };
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (r.first + r.second);
}

ContourConstructionError construction_error(const PhaseContext& ctx, double level, const std::string& what) {
  std::vector<double> theta(kArcScan + 1), residual(kArcScan + 1);
  for (int i = 0; i <= kArcScan; ++i) {
    theta[i] = kHalfPi * i / kArcScan;
    residual[i] = arc_residual(ctx, theta[i], level);
  }
  return ContourConstructionError(what, std::move(theta), std::move(residual));
}

std::vector<double> scan_arc_roots(const PhaseContext& ctx, double level) {
  std::vector<double> roots;
  double prev_t = 1e-12;
  double prev_g = arc_residual(ctx, prev_t, level);
  for (int i = 1; i <= kArcScan; ++i) {
    const double t = i == kArcScan ? kHalfPi - 1e-12 : kHalfPi * i / kArcScan;
    const double g = arc_residual(ctx, t, level);
    if (g == 0.0) {
      roots.push_back(t);
    } else if ((g > 0.0) != (prev_g > 0.0) && prev_g != 0.0) {
      roots.push_back(refine_arc_root(ctx, prev_t, t, level));
    }
    prev_t = t;
    prev_g = g;
  }
  return roots;
}

// Walks from the saddle along one steepest-descent half and classifies where it goes.
Traced trace_half(const PhaseContext& ctx, ComplexPoint w, int sign, double level) {
  const double two_log = 2.0 * std::log(ctx.alpha);
  const double re_stop = std::max(two_log, 6.0) + 4.0;
  const double re_hw = h(ctx, w).real();
  const double origin_radius = 0.5 * std::min(1.0, std::abs(w));
  const ComplexPoint d = detail::saddle_direction(ctx, w, sign);
  HalfEnd end = HalfEnd::infinity;
  auto nodes = detail::trace(ctx, level, w, d, 0.02, [&](ComplexPoint y) {
    if (y.real() >= re_stop || (y.real() >= two_log && std::abs(y) > 1.0 && h(ctx, y).real() < re_hw - 800.0)) {
      end = HalfEnd::infinity;
      return true;
    }
    if (std::abs(y) < origin_radius) {
      end = HalfEnd::origin;
      return true;
    }
    return false;
  });
  return {end, d, std::move(nodes)};
}

// First index i with |nodes[i]| and |nodes[i+1]| on opposite sides of the unit circle.
std::ptrdiff_t circle_crossing(const std::vector<ComplexPoint>& nodes) {
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if ((std::abs(nodes[i]) >= 1.0) != (std::abs(nodes[i + 1]) >= 1.0)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

// Solves Re y(s) = target on [lo, hi] of one half; Re y is monotone there by construction of the bracket.
double solve_re(const DescentHalf& half, double lo, double hi, double target) {
  auto g = [&](double s) { return half.point(s).first.real() - target; };
  if (g(lo) == 0.0) return lo;
  if (g(hi) == 0.0) return hi;
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (r.first + r.second);
}

// Samples y along a piece: skeleton nodes strictly inside the s-range plus both endpoints.
void append_piece_nodes(const DescentHalf& half, const LevelPiece& piece, std::vector<ComplexPoint>& out) {
  const double lo = std::min(piece.s_begin, piece.s_end);
  const double hi = std::max(piece.s_begin, piece.s_end);
  std::vector<ComplexPoint> inner;
  const auto& s = half.s_values();
  const auto& n = half.nodes();
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (s[i] > lo && s[i] < hi) inner.push_back(n[i]);
  }
  if (piece.s_begin > piece.s_end) std::reverse(inner.begin(), inner.end());
  if (out.empty()) out.push_back(half.point(piece.s_begin).first);
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(half.point(piece.s_end).first);
}

}  // namespace

const Segment& ContourPath::segment(SegmentKind kind) const {
  for (const auto& s : segments) {
    if (s.kind == kind) return s;
  }
  throw DomainError("ContourPath: missing segment");
}

double level_line_box_excursion(const ContourPath& path) {
  const double re_hi = 2.0 * std::log(path.ctx.alpha);
  const double im_hi = std::numbers::pi / 2.0;
  double worst = 0.0;
  for (const auto& y : path.segment(SegmentKind::level_line).nodes) {
    worst = std::max({worst, -y.real(), y.real() - re_hi, -y.imag(), y.imag() - im_hi});
  }
  return worst;
}

ContourPath build_contour(const PhaseContext& ctx) {
  ContourPath path;
  path.ctx = ctx;
  const ComplexPoint w = saddle(ctx);
  const double level = h(ctx, w).imag();
  path.saddle = w;
  path.saddle_inside = std::abs(w) < 1.0;

  Traced first = trace_half(ctx, w, 1, level);
  Traced second = trace_half(ctx, w, -1, level);
  if (first.end == second.end) {
    throw construction_error(ctx, level, "both steepest-descent halves end on the same side");
  }
  if (first.end == HalfEnd::origin) std::swap(first, second);
  path.infinity_half = std::make_shared<DescentHalf>(ctx, w, first.direction, std::move(first.nodes));
  path.origin_half = std::make_shared<DescentHalf>(ctx, w, second.direction, std::move(second.nodes));

  // u: where the relevant half meets the unit circle.
  const DescentHalf& through_u = path.saddle_inside ? *path.infinity_half : *path.origin_half;
  const auto cross = circle_crossing(through_u.nodes());
  if (cross < 0) throw construction_error(ctx, level, "level line does not meet the unit arc");
  const double t1 = std::arg(through_u.nodes()[cross]);
  const double t2 = std::arg(through_u.nodes()[cross + 1]);
  double lo = std::min(t1, t2), hi = std::max(t1, t2);
  bool bracketed = false;
  for (double widen = 0.0; widen <= 0.1; widen = widen == 0.0 ? 1e-6 : widen * 4.0) {
    const double a = std::max(1e-12, lo - widen), b = std::min(kHalfPi - 1e-12, hi + widen);
    const double ga = arc_residual(ctx, a, level), gb = arc_residual(ctx, b, level);
    if (ga == 0.0 || gb == 0.0 || (ga > 0.0) != (gb > 0.0)) {
      lo = a;
      hi = b;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) throw construction_error(ctx, level, "no sign change of Im h on the arc near the crossing");
  path.theta_u = refine_arc_root(ctx, lo, hi, level);
  path.u = std::polar(1.0, path.theta_u);
  path.arc_roots = scan_arc_roots(ctx, level);
  const double s_u = through_u.s_of(path.u);

  // Path order after u, as pieces of the two halves.
  std::vector<LevelPiece> after_u;
  if (path.saddle_inside) {
    after_u.push_back({1, s_u, path.infinity_half->s_max()});
  } else {
    after_u.push_back({0, s_u, 0.0});
    after_u.push_back({1, 0.0, path.infinity_half->s_max()});
  }
  auto half_of = [&](int idx) -> const DescentHalf& { return idx == 0 ? *path.origin_half : *path.infinity_half; };

  // v: first point with Re y = 2 log alpha, unless Re h falls from u onwards.
  const double re_v = 2.0 * std::log(ctx.alpha);
  std::vector<LevelPiece> l3, l4;
  if (path.saddle_inside || path.u.real() >= re_v) {
    path.v = path.u;
    l4 = after_u;
  } else {
    bool found = false;
    for (std::size_t p = 0; p < after_u.size() && !found; ++p) {
      const auto& piece = after_u[p];
      const auto& half = half_of(piece.half);
      // walk skeleton nodes in traversal order
      std::vector<std::pair<double, double>> seq;  // (s, Re y)
      const auto& s = half.s_values();
      const auto& n = half.nodes();
      const double lo_s = std::min(piece.s_begin, piece.s_end), hi_s = std::max(piece.s_begin, piece.s_end);
      seq.emplace_back(piece.s_begin, half.point(piece.s_begin).first.real());
      std::vector<std::pair<double, double>> inner;
      for (std::size_t i = 0; i < n.size(); ++i) {
        if (s[i] > lo_s && s[i] < hi_s) inner.emplace_back(s[i], n[i].real());
      }
      if (piece.s_begin > piece.s_end) std::reverse(inner.begin(), inner.end());
      seq.insert(seq.end(), inner.begin(), inner.end());
      seq.emplace_back(piece.s_end, half.point(piece.s_end).first.real());
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i].second < re_v && seq[i + 1].second >= re_v) {
          const double sv = solve_re(half, std::min(seq[i].first, seq[i + 1].first),
                                     std::max(seq[i].first, seq[i + 1].first), re_v);
          path.v = half.point(sv).first;
          for (std::size_t q = 0; q < p; ++q) l3.push_back(after_u[q]);
          l3.push_back({piece.half, piece.s_begin, sv});
          l4.push_back({piece.half, sv, piece.s_end});
          for (std::size_t q = p + 1; q < after_u.size(); ++q) l4.push_back(after_u[q]);
          found = true;
          break;
        }
      }
    }
    if (!found) throw construction_error(ctx, level, "level line never reaches Re y = 2 log alpha");
  }

  Segment real{SegmentKind::real_axis, {}, ctx.b, 1.0, {}};
  for (int i = 0; i <= 32; ++i) real.nodes.emplace_back(ctx.b + (1.0 - ctx.b) * i / 32.0, 0.0);
  Segment arc{SegmentKind::unit_arc, {}, 0.0, path.theta_u, {}};
  for (int i = 0; i <= 32; ++i) arc.nodes.push_back(std::polar(1.0, path.theta_u * i / 32.0));
  arc.nodes.back() = path.u;
  Segment line{SegmentKind::level_line, {}, 0.0, 0.0, l3};
  if (l3.empty()) {
    line.nodes.push_back(path.u);
  } else {
    for (const auto& piece : l3) append_piece_nodes(half_of(piece.half), piece, line.nodes);
  }
  Segment tail{SegmentKind::tail, {}, 0.0, 0.0, l4};
  for (const auto& piece : l4) append_piece_nodes(half_of(piece.half), piece, tail.nodes);
  path.segments = {std::move(real), std::move(arc), std::move(line), std::move(tail)};
  return path;
}

void write_path_csv(const ContourPath& path, std::ostream& out) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(17);
  for (const auto& seg : path.segments) {
    for (const auto& y : seg.nodes) {
      const auto hv = h(path.ctx, y);
      out << segment_name(seg.kind) << ',' << y.real() << ',' << y.imag() << ',' << hv.real() << ',' << hv.imag()
          << '\n';
    }
  }
  out.flags(flags);
  out.precision(prec);
}

}  // namespace stieltjes::contour
