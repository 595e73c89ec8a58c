#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

// Argument outside the domain where the requested quantity is defined
// (pole, divergent sum, non-integrable endpoint, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A precondition on the input shape was violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside a finite table of known closed forms.
class NotInTableError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A numeric procedure hit its iteration cap. Carries the best estimate so the
// caller can still report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::string best_estimate, double last_difference)
      : std::runtime_error(what),
        best_estimate_(std::move(best_estimate)),
        last_difference_(last_difference) {}

  const std::string& best_estimate() const { return best_estimate_; }
  double last_difference() const { return last_difference_; }

 private:
  std::string best_estimate_;
  double last_difference_;
};

}  // namespace zetakit
