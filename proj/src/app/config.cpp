#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "stieltjes/cli.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::cli {

void RunConfig::validate() const {
  if (alpha) {
    if (!std::isfinite(*alpha) || *alpha < 0.0) throw ConfigError("--alpha must be a finite value >= 0");
  } else {
    if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("--step must be > 0");
    if (!std::isfinite(alpha_min) || alpha_min < 0.0) throw ConfigError("--alpha-min must be >= 0");
    if (!std::isfinite(alpha_max) || alpha_min > alpha_max) throw ConfigError("--alpha-min must not exceed --alpha-max");
    if ((alpha_max - alpha_min) / step > 1e6) throw ConfigError("--step gives more than 1e6 grid points");
  }
  if (!(a > 0.0 && a <= 1.0)) throw ConfigError("--a must lie in (0, 1]");
  if (k < 1) throw ConfigError("--k must be >= 1");
  if (m && *m < 1) throw ConfigError("--m must be >= 1");
  if (v && (*v < 2 || *v > core::kMaxDerivOrder || *v % 2 != 0)) throw ConfigError("--v must be even and in [2, 60]");
  if (tol && !(*tol > 0.0)) throw ConfigError("--tol must be > 0");
}

std::vector<double> RunConfig::alpha_grid() const {
  if (alpha) return {*alpha};
  std::vector<double> grid;
  const auto n = static_cast<long>(std::floor((alpha_max - alpha_min) / step + 1e-9));
  for (long i = 0; i <= n; ++i) grid.push_back(alpha_min + static_cast<double>(i) * step);
  return grid;
}

core::EmConfig RunConfig::em_config() const {
  core::EmConfig c;
  if (m) c.m = *m;
  if (v) c.v = *v;
  if (tol) c.tol = *tol;
  // an explicit (m, v) pins the Euler-Maclaurin sum on the real axis
  if (m || v) c.method = core::EmMethod::real_axis;
  return c;
}

std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "svg") return Format::svg;
  return std::nullopt;
}

std::size_t thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("STIELTJES_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= n || failure) return;
        i = next++;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace stieltjes::cli
