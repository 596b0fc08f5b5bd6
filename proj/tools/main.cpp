#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "stieltjes/cli.hpp"

int main(int argc, char** argv) {
  using stieltjes::cli::Format;
  stieltjes::cli::RunConfig cfg;
  CLI::App app{"Fractional Stieltjes constants: values, bounds, contours and checks"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}, {"svg", Format::svg}};
  double alpha = 0.0;
  int m = 0, v = 0;
  double tol = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha, "single alpha");
    sub->add_option("--alpha-min", cfg.alpha_min, "grid start");
    sub->add_option("--alpha-max", cfg.alpha_max, "grid end");
    sub->add_option("--step", cfg.step, "grid step");
    sub->add_option("--a", cfg.a, "shift a in (0, 1]");
    sub->add_option("--k", cfg.k, "Fourier index for saddle");
    sub->add_option("--m", m, "Euler-Maclaurin split point");
    sub->add_option("--v", v, "Euler-Maclaurin order (even)");
    sub->add_option("--tol", tol, "target absolute tolerance");
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--format", cfg.format, "csv | json | svg")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""));
    sub->add_option("--suite", cfg.suite, "verify suite");
    sub->add_flag("--verbose", "progress on stderr");
  };
  const std::pair<const char*, const char*> commands[] = {
      {"compute", "C_alpha(a) and gamma_alpha(a) over an alpha grid"},
      {"bounds", "every bound family next to the measured value"},
      {"saddle", "saddle, contour segments and S_k for one alpha and k"},
      {"verify", "run the numerical check suites"},
      {"plot", "bound comparison figure as CSV and SVG"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : stieltjes::cli::kUsage;
  }
  auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub->count("--alpha") > 0) cfg.alpha = alpha;
  if (sub->count("--m") > 0) cfg.m = m;
  if (sub->count("--v") > 0) cfg.v = v;
  if (sub->count("--tol") > 0) cfg.tol = tol;
  cfg.verbosity = static_cast<int>(sub->count("--verbose"));
  return stieltjes::cli::run(cfg, std::cout, std::cerr);
}
