// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>
#include <fmt/format.h>

#include "stieltjes/bounds.hpp"
#include "stieltjes/contour.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/special_functions.hpp"

using namespace stieltjes;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string summary;
};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

// ---------------------------------------------------------------------------

Outcome saddle_fixtures() {
  const auto w1 = contour::saddle(contour::make_context(1, 200.0, 1.0));
  const auto w40 = contour::saddle(contour::make_context(40, 200.0, 1.0));
  const double d1 = std::abs(w1 - ComplexPoint(2.46, 1.14));
  const double d40 = std::abs(w40 - ComplexPoint(0.29, 0.52));
  return {d1 <= 0.01 && d40 <= 0.01,
          fmt::format("w1(200)={:.6f}{:+.6f}i dist={:.2e}; w40(200)={:.6f}{:+.6f}i dist={:.2e} (tol 0.01)", w1.real(),
                      w1.imag(), d1, w40.real(), w40.imag(), d40)};
}

Outcome lambert_identity() {
  double worst = 0.0;
  bool range = true, below_log = true;
  for (double t : log_grid(0.01, 1e4, 200)) {
    const ComplexPoint z(0.0, t);
    const auto w = special::lambert_w0(z);
    worst = std::max(worst, std::abs(w * std::exp(w) - z) / std::max(1.0, t));
    range = range && w.imag() > 0.0 && w.imag() < kPi / 2 && w.real() > 0.0;
    if (t > 1.97) below_log = below_log && w.real() < std::log(t);
  }
  return {worst <= 1e-13 && range && below_log,
          fmt::format("max residual/max(1,|z|)={:.2e} (tol 1e-13); range invariants {}; Re W0(it)<log t {}", worst,
                      range ? "hold" : "VIOLATED", below_log ? "holds" : "VIOLATED")};
}

Outcome t_roundtrip() {
  double worst = 0.0;
  for (double t : log_grid(0.01, 1e4, 1000)) {
    worst = std::max(worst, std::fabs(special::t_of_y(special::i_of_t(t)) - t) / std::max(1.0, t));
  }
  return {worst <= 1e-12, fmt::format("max |T(I(t))-t|/max(1,t)={:.2e} over 1000 points (tol 1e-12)", worst)};
}

Outcome monotone_and_sine() {
  auto g = [](double t) {
    const auto w = special::lambert_w0({0.0, t});
    return (std::log(w) - 1.0 / w).real();
  };
  double min_deriv = std::numeric_limits<double>::infinity();
  for (double t : log_grid(0.01, 1e4, 1000)) {
    const double h = 1e-4 * t;
    min_deriv = std::min(min_deriv, (g(t + h) - g(t - h)) / (2 * h));
  }
  double min_ks = std::numeric_limits<double>::infinity();
  for (double alpha : log_grid(kTwoPi, 500.0, 60)) {
    for (int k = 1; k <= 100; ++k) {
      min_ks = std::min(min_ks, k * std::sin(special::lambert_w0({0.0, alpha / (kTwoPi * k)}).imag()));
    }
  }
  return {min_deriv > 0.0 && min_ks >= 0.5,
          fmt::format("min derivative={:.3e} (>0); min k sin(Im w_k)={:.6f} (>=0.5)", min_deriv, min_ks)};
}

Outcome p3_integral() {
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const auto r = core::tail_integral(0.05 * i, 1.0, 1, 3);
    worst = std::max(worst, std::fabs(r.value) + r.err);
  }
  const double margin = 1.0 - worst / 0.013;
  return {worst < 0.013 && margin >= 0.05,
          fmt::format("max |int P3 f'''|={:.6f} < 0.013, margin {:.1f}% (need >=5%)", worst, 100 * margin)};
}

Outcome oracle_equivalence() {
  double worst = 0.0;
  for (int k : {1, 2, 5}) {
    for (double alpha : {3.0, 7.0, 15.0}) {
      const auto ctx = contour::make_context(k, alpha, 1.0);
      const auto c = contour::s_k_contour(ctx).s_k;
      const auto r = contour::s_k_real_axis(ctx);
      worst = std::max(worst, std::abs(c - r) / std::abs(r));
    }
  }
  return {worst <= 1e-6, fmt::format("max relative difference={:.2e} over 9 cases (tol 1e-6)", worst)};
}

Outcome segment_bounds() {
  double r[5] = {0, 0, 0, 0, 0};
  bool strict_l1 = true;
  for (int k : {1, 2, 5, 40}) {
    for (double alpha : {kTwoPi, 10.0, 50.0, 200.0}) {
      for (double a : {0.1, 1.0}) {
        const auto d = contour::s_k_contour(contour::make_context(k, alpha, a));
        strict_l1 = strict_l1 && std::abs(d.l1) < d.bound_l1;
        r[0] = std::max(r[0], std::abs(d.l1) / d.bound_l1);
        r[1] = std::max(r[1], std::abs(d.l2) / d.bound_l2);
        r[2] = std::max(r[2], std::abs(d.l3) / d.bound_l3);
        r[3] = std::max(r[3], std::abs(d.l4) / d.bound_l4);
        r[4] = std::max(r[4], std::abs(d.s_k) / d.s_bound);
      }
    }
  }
  const bool ok = strict_l1 && r[1] <= 1.0 && r[2] <= 1.0 && r[3] <= 1.0 && r[4] <= 1.0;
  return {ok, fmt::format("max |.|/bound: L1 {:.3g}, L2 {:.3g}, L3 {:.3g}, L4 {:.3g}, S_k {:.3g} over 32 cases", r[0],
                          r[1], r[2], r[3], r[4])};
}

// gamma_n from long-double partial sums with the trapezoid end term, at N and 2N.
double partial_sum_gamma(int n, long N, double* spread) {
  auto at = [&](long cut) {
    long double sum = 0.0L, comp = 0.0L;
    auto f = [&](long double x) { return (n == 0 ? 1.0L : std::pow(std::log(x), n)) / x; };
    for (long k = 1; k < cut; ++k) {
      const long double y = f(k) - comp;
      const long double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return sum + 0.5L * f(cut) - std::pow(std::log(static_cast<long double>(cut)), n + 1) / (n + 1);
  };
  const long double a = at(N), b = at(2 * N);
  *spread = static_cast<double>(std::fabs(b - a));
  return static_cast<double>(b);
}

Outcome known_constants() {
  const double published[3] = {0.5772156649, -0.0728158454, -0.0096903632};
  std::string s;
  bool ok = true;
  for (int n = 0; n <= 2; ++n) {
    double spread = 0.0;
    const double oracle = partial_sum_gamma(n, 1L << 21, &spread);
    const double got = core::gamma_alpha(n, 1.0).gamma_value.real();
    const double d = std::fabs(got - oracle);
    ok = ok && d <= 1e-8 && std::fabs(got - published[n]) <= 1e-8;
    s += fmt::format("{}gamma_{}={:.12f} |diff oracle|={:.1e} (oracle spread {:.1e})", n ? "; " : "", n, got, d, spread);
  }
  return {ok, s + " (tol 1e-8)"};
}

Outcome em_self_consistency() {
  double worst = 0.0;
  std::string where;
  for (double alpha : {1.0, 5.0, 20.0}) {
    for (double a : {0.1, 0.5, 1.0}) {
      std::vector<core::StieltjesResult> rs;
      for (int m : {1, 5, 20, 100}) {
        for (int v : {2, 4, 8}) {
          core::EmConfig c;
          c.m = m;
          c.v = v;
          c.method = core::EmMethod::real_axis;
          rs.push_back(core::c_alpha(alpha, a, c));
        }
      }
      for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
          const double ratio =
              std::fabs(rs[i].c_value - rs[j].c_value) / (rs[i].err_bound + rs[j].err_bound);
          if (ratio > worst) {
            worst = ratio;
            where = fmt::format("alpha={:g} a={:g}", alpha, a);
          }
        }
      }
    }
  }
  return {worst <= 1.0, fmt::format("max |C_i-C_j|/(err_i+err_j)={:.3g} at {} over 12 configs x 9 points (<=1)", worst,
                                    where)};
}

Outcome theorem_witness() {
  double worst = -std::numeric_limits<double>::infinity();
  int used = 0, skipped = 0;
  for (double alpha = kTwoPi; alpha <= 60.0 + 1e-9; alpha += 0.5) {
    const auto r = core::c_alpha(alpha, 1.0);
    if (!(r.err_bound < 0.01 * std::fabs(r.c_value))) {
      ++skipped;
      continue;
    }
    ++used;
    worst = std::max(worst, std::log10(std::fabs(r.c_value) + r.err_bound) - bounds::theorem_bound(alpha).log10_value);
  }
  double conj = -std::numeric_limits<double>::infinity(), remark = conj;
  for (double alpha : log_grid(kTwoPi, 1e3, 500)) {
    conj = std::max(conj, bounds::conjecture_bound(alpha).log10_value - bounds::theorem_bound(alpha).log10_value);
    if (alpha / kTwoPi > 1.97) remark = std::max(remark, bounds::saddle_exponent(alpha) - alpha * std::log(std::log(alpha)));
  }
  return {worst <= 0.0 && conj <= 0.0 && remark <= 0.0 && skipped == 0,
          fmt::format("max log10(|C|/theorem)={:.3f} over {} points ({} skipped); max log10(conj/theorem)={:.3f}; "
                      "max log-log gap={:.3f}",
                      worst, used, skipped, conj, remark)};
}

Outcome laurent_cross_check() {
  const double s = 1.05, eps = s - 1.0;
  std::string out;
  bool ok = true;
  for (double a : {1.0, 0.5}) {
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    const double zeta = a == 1.0 ? boost::math::zeta(s) : (std::pow(2.0, s) - 1.0) * boost::math::zeta(s);
    const double zeta_own = core::hurwitz_zeta(s, a);
    double poly = 0.0, poly_err = 0.0, rem = 0.0, fact = 1.0;
    for (int n = 0; n <= 9; ++n) {
      if (n > 0) fact *= n;
      const auto g = core::gamma_alpha(n, a);
      const double term = (n % 2 == 0 ? 1.0 : -1.0) * g.gamma_value.real() / fact * std::pow(eps, n);
      if (n <= 6) {
        poly += term;
        poly_err += g.err_bound / fact * std::pow(eps, n);
      } else {
        rem += std::fabs(term);
      }
    }
    const double lhs = zeta - 1.0 / eps;
    const double diff = std::fabs(lhs - poly);
    // remainder of degree >= 7, engine error, and rounding of zeta - 1/(s-1)
    const double tol = rem + poly_err + 4.0 * std::numeric_limits<double>::epsilon() * (std::fabs(zeta) + 1.0 / eps);
    const bool own = std::fabs(zeta_own - zeta) <= 1e-14 * zeta;
    ok = ok && diff <= tol && own;
    out += fmt::format("{}a={:g}: |diff|={:.2e} tol={:.2e} hurwitz vs boost {}", a == 1.0 ? "" : "; ", a, diff, tol,
                       own ? "agree" : "DISAGREE");
  }
  return {ok, out};
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(s);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

bool balanced_xml(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = doc.find('<', i)) != std::string::npos) {
    const auto j = doc.find('>', i);
    if (j == std::string::npos) return false;
    const std::string tag = doc.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else if (tag.back() != '/') {
      stack.push_back(tag.substr(0, tag.find(' ')));
    }
  }
  return stack.empty();
}

Outcome figure_reproduction() {
  const auto dir = std::filesystem::temp_directory_path() / "stieltjes_acceptance";
  std::filesystem::create_directories(dir);
  const auto base = (dir / "bound_comparison").string();
  const std::string cmd =
      fmt::format("\"{}\" plot --alpha-min 1 --alpha-max 300 --step 1 --out \"{}\" > /dev/null", STIELTJES_CLI_PATH, base);
  if (std::system(cmd.c_str()) != 0) return {false, "plot command failed: " + cmd};

  std::ifstream csv(base + ".csv"), svg(base + ".svg"), gold(std::string(STIELTJES_GOLDEN_DIR) + "/plot_header.csv");
  std::string schema, header, gschema, gheader;
  std::getline(csv, schema);
  std::getline(csv, header);
  std::getline(gold, gschema);
  std::getline(gold, gheader);
  const bool schema_ok = schema == gschema && header == gheader;
  std::vector<std::vector<std::string>> rows;
  for (std::string l; std::getline(csv, l);) rows.push_back(split(l));
  std::stringstream ss;
  ss << svg.rdbuf();
  const bool svg_ok = balanced_xml(ss.str()) && ss.str().find("<polyline") != std::string::npos;

  const auto cols = split(header);
  int checked = 0;
  bool dominance = true;
  std::string first_violation;
  for (const auto& r : rows) {
    const double alpha = std::stod(r[0]);
    if (alpha != 6 && alpha != 10 && alpha != 20 && alpha != 40) continue;
    for (std::size_t m = 8; m < cols.size(); ++m) {
      if (r[m].empty()) continue;
      for (std::size_t b = 1; b < 8; ++b) {
        if (r[b].empty()) continue;
        ++checked;
        if (std::stod(r[b]) < std::stod(r[m]) && dominance) {
          dominance = false;
          first_violation = fmt::format(" first violation alpha={:g} {} vs {}", alpha, cols[b], cols[m]);
        }
      }
    }
  }
  const bool ok = schema_ok && svg_ok && rows.size() == 300 && dominance && checked > 0;
  return {ok, fmt::format("schema {}, {} rows (want 300), svg {}, {} bound-vs-measured comparisons at alpha in "
                          "{{6,10,20,40}} {}{}",
                          schema_ok ? "matches golden" : "MISMATCH", rows.size(), svg_ok ? "well-formed" : "MALFORMED",
                          checked, dominance ? "all dominated" : "NOT dominated", first_violation)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"saddle fixtures", saddle_fixtures},
      {"Lambert W identity and range", lambert_identity},
      {"T/I roundtrip", t_roundtrip},
      {"monotonicity and sine bound", monotone_and_sine},
      {"P3 integral below 0.013", p3_integral},
      {"contour vs real-axis S_k", oracle_equivalence},
      {"segment bounds", segment_bounds},
      {"known Stieltjes constants", known_constants},
      {"Euler-Maclaurin self-consistency", em_self_consistency},
      {"theorem witness", theorem_witness},
      {"Laurent cross-check", laurent_cross_check},
      {"bound comparison figure", figure_reproduction},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, name, o.summary.c_str(), secs);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
