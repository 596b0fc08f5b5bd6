#pragma once

#include <complex>
#include <memory>
#include <ostream>
#include <string_view>
#include <vector>

#include "stieltjes/special_functions.hpp"

namespace stieltjes::contour {

/// Phase data for S_k: h_k(y) = 2 pi i k (e^y - a) + alpha log y, lower limit b = log(1+a).
struct PhaseContext {
  int k = 1;
  double alpha = 1.0;
  double a = 1.0;
  double b = 0.0;
};

/// Validates k >= 1, alpha >= 1, a in (0, 1] and fills b.
PhaseContext make_context(int k, double alpha, double a);

ComplexPoint h(const PhaseContext& ctx, ComplexPoint y);
ComplexPoint h_prime(const PhaseContext& ctx, ComplexPoint y);
ComplexPoint h_second(const PhaseContext& ctx, ComplexPoint y);

/// Amplitude (alpha(alpha-1) - 3 alpha y + 2 y^2) / y^2 for v = 2, and
/// sum_j c_{v,j} y^{-j} in general.
ComplexPoint q(const PhaseContext& ctx, ComplexPoint y, int v = 2);

/// w_k(alpha) = W0(i alpha / (2 pi k)).
ComplexPoint saddle(const PhaseContext& ctx);

/// Nodes on the level line Im h = Im h(start), advancing towards increasing Re y
/// until Re y >= re_stop. `step` is the predictor length.
std::vector<ComplexPoint> trace_level_line(const PhaseContext& ctx, ComplexPoint start, double re_stop,
                                           double step = 0.02);

enum class SegmentKind { real_axis, unit_arc, level_line, tail };

std::string_view segment_name(SegmentKind kind);

/// One steepest-descent half through the saddle, parametrised by s >= 0 with
/// h(y(s)) = h(w) - s^2. Holds the traced skeleton used to seed Newton.
class DescentHalf {
 public:
  DescentHalf(PhaseContext ctx, ComplexPoint w, ComplexPoint direction, std::vector<ComplexPoint> nodes);

  const std::vector<ComplexPoint>& nodes() const { return nodes_; }
  const std::vector<double>& s_values() const { return s_; }
  double s_max() const { return s_.back(); }

  /// y(s) and dy/ds.
  std::pair<ComplexPoint, ComplexPoint> point(double s) const;

  /// s-coordinate of a point on this half.
  double s_of(ComplexPoint y) const;

 private:
  PhaseContext ctx_;
  ComplexPoint w_;
  ComplexPoint direction_;
  double local_scale_;
  std::vector<ComplexPoint> nodes_;
  std::vector<double> s_;
};

/// A piece of the level line: half index (0 = origin side, 1 = infinity side) and s-range.
struct LevelPiece {
  int half = 1;
  double s_begin = 0.0;
  double s_end = 0.0;
};

struct Segment {
  SegmentKind kind = SegmentKind::real_axis;
  std::vector<ComplexPoint> nodes;
  double t_begin = 0.0;  // real_axis: y, unit_arc: theta
  double t_end = 0.0;
  std::vector<LevelPiece> pieces;  // level_line and tail
};

struct ContourPath {
  PhaseContext ctx;
  ComplexPoint saddle;
  ComplexPoint u;
  ComplexPoint v;
  double theta_u = 0.0;
  bool saddle_inside = false;
  std::vector<double> arc_roots;  // every theta in (0, pi/2) with Im h(e^{i theta}) = Im h(w)
  std::vector<Segment> segments;  // real_axis, unit_arc, level_line, tail
  std::shared_ptr<const DescentHalf> origin_half;
  std::shared_ptr<const DescentHalf> infinity_half;

  const Segment& segment(SegmentKind kind) const;
};

ContourPath build_contour(const PhaseContext& ctx);

/// How far the level-line nodes leave the box [0, 2 log alpha] x [0, pi/2]; 0 when contained.
double level_line_box_excursion(const ContourPath& path);

/// Writes `segment_kind,re,im,re_h,im_h` rows (no header).
void write_path_csv(const ContourPath& path, std::ostream& out);

struct SkDecomposition {
  std::complex<double> l1, l2, l3, l4;
  std::complex<double> s_k;
  double quad_err = 0.0;
  double bound_l1 = 0.0;
  double bound_l2 = 0.0;
  double bound_l3 = 0.0;
  double bound_l4 = 0.0;
  double s_bound = 0.0;
};

/// S_k = integral over [b, inf) of e^{h_k(y)} e^{-2y} q(y) dy along the contour, split into L1..L4.
SkDecomposition s_k_contour(const PhaseContext& ctx);
SkDecomposition s_k_contour(const ContourPath& path);

struct SegmentIntegrals {
  std::complex<double> values[4];
  double errors[4] = {0, 0, 0, 0};
  std::complex<double> total() const { return values[0] + values[1] + values[2] + values[3]; }
  double error() const { return errors[0] + errors[1] + errors[2] + errors[3]; }
};

/// Contour integrals of e^{h} e^{-v y} q_v(y), i.e. the integral of e^{2 pi i k x} f^(v)(x) over [1, inf).
SegmentIntegrals integrate_contour(const ContourPath& path, int v, double rel_tol = 1e-10);

struct RealAxisResult {
  std::complex<double> value;
  double err = 0.0;
  double x_max = 0.0;
};

/// Brute-force S_k on the real axis: Gauss panels of length 1/(k P) up to x_max, then
/// the asymptotic expansion of the oscillatory tail with an envelope remainder.
/// x_max <= 0 picks a cut automatically.
RealAxisResult s_k_real_axis_detailed(const PhaseContext& ctx, double x_max, int panels_per_period, int v = 2);
std::complex<double> s_k_real_axis(const PhaseContext& ctx, double x_max = 0.0, int panels_per_period = 2);

/// Integral of B_2({x}) f''(x) over [1, inf).
double p2_integral(double alpha, double a);

struct FourierRemainder {
  double value = 0.0;
  double err = 0.0;
  int terms = 0;
};

/// (-1)^{v-1}/v! times the integral of B_v({x}) f^(v) over [1, inf), via the Fourier series
/// of B_v and contour evaluations of the S_k for even v.
FourierRemainder fourier_remainder(double alpha, double a, int v, double rel_tol, int max_terms);

}  // namespace stieltjes::contour
