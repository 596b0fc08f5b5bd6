#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace stieltjes {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid configuration (caps, parity, ordering of knobs).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iteration, tracer or quadrature failed to deliver the requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LambertNonConvergence : public NumericalError {
 public:
  LambertNonConvergence(std::complex<double> z, std::complex<double> last, double residual)
      : NumericalError("lambert_w0: no convergence"), z_(z), last_(last), residual_(residual) {}
  std::complex<double> argument() const { return z_; }
  std::complex<double> last_iterate() const { return last_; }
  double residual() const { return residual_; }

 private:
  std::complex<double> z_;
  std::complex<double> last_;
  double residual_;
};

class TracingError : public NumericalError {
 public:
  TracingError(const std::string& what, std::complex<double> last_good)
      : NumericalError(what), last_good_(last_good) {}
  std::complex<double> last_good_node() const { return last_good_; }

 private:
  std::complex<double> last_good_;
};

// Carries the arc scan so callers can report where the search looked.
class ContourConstructionError : public NumericalError {
 public:
  ContourConstructionError(const std::string& what, std::vector<double> scan_theta,
                           std::vector<double> scan_residual)
      : NumericalError(what), theta_(std::move(scan_theta)), residual_(std::move(scan_residual)) {}
  const std::vector<double>& scan_theta() const { return theta_; }
  const std::vector<double>& scan_residual() const { return residual_; }

 private:
  std::vector<double> theta_;
  std::vector<double> residual_;
};

class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& segment, const std::string& what)
      : NumericalError(segment + ": " + what), segment_(segment) {}
  const std::string& segment() const { return segment_; }

 private:
  std::string segment_;
};

// The analytic tail envelope is still too large at the chosen cut.
class TailCutError : public NumericalError {
 public:
  TailCutError(const std::string& what, double cut, double envelope)
      : NumericalError(what), cut_(cut), envelope_(envelope) {}
  double cut() const { return cut_; }
  double envelope() const { return envelope_; }

 private:
  double cut_;
  double envelope_;
};

}  // namespace stieltjes
