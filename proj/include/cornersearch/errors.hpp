#pragma once

#include <stdexcept>
#include <string>

namespace cornersearch {

// Precondition violated by caller-supplied input. CLI exit status 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A trajectory breaks the ordering or corner rules, or a trajectory file is malformed.
class InvalidTrajectoryError : public DomainError {
 public:
  explicit InvalidTrajectoryError(const std::string& what) : DomainError(what) {}
};

// The cost model produced something it never should (NaN steps, an infeasible
// upper bracket). CLI exit status 1.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cornersearch
