#pragma once

#include <stdexcept>
#include <string>

namespace b2der {

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotMember : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BalancedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct HypothesisViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A multiplicity outside every dispatch case of the closed-form basis table.
struct CaseNotCovered : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace b2der
