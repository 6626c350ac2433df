#pragma once

#include <stdexcept>
#include <string>

namespace ffheat {

// Invalid or inconsistent configuration (bad key, violated invariant).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure while advancing the grid solution. Carries the step
// index (-1 when unknown) and the simulation time of the failure.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, long step_index, double t)
      : std::runtime_error(what), step_index_(step_index), t_(t) {}
  long step_index() const { return step_index_; }
  double time() const { return t_; }

 private:
  long step_index_;
  double t_;
};

// Raw-basis theta evaluation hit an eigenmode node where the defining
// expression does not cancel.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(double x)
      : std::runtime_error("theta gradient is singular at x = " +
                           std::to_string(x) + " (raw basis node)"),
        x_(x) {}
  double offending_x() const { return x_; }

 private:
  double x_;
};

// Moment width requested for an (almost) everywhere-zero field.
class UndefinedWidthError : public std::runtime_error {
 public:
  UndefinedWidthError()
      : std::runtime_error("profile width undefined: field integrates to zero") {}
};

}  // namespace ffheat
