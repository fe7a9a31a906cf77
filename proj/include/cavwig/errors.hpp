#pragma once

#include <stdexcept>
#include <string>

namespace cavwig {

/// Numerical accuracy could not be guaranteed (e.g. branch tracking lost,
/// imaginary residual above tolerance).
class accuracy_fault : public std::runtime_error {
 public:
  explicit accuracy_fault(const std::string& what) : std::runtime_error(what) {}
};

/// Fock-space truncation insufficient after all escalations.
class truncation_error : public std::runtime_error {
 public:
  explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Linear solve failed or produced an unusable solution.
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-step integrator violated its trace-drift budget.
class step_size_error : public std::runtime_error {
 public:
  explicit step_size_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cavwig
