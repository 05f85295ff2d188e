#pragma once

#include <stdexcept>
#include <string>

namespace nck {

/// Invalid input: bad dimensions, empty sets, out-of-range arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A routine violated its own postcondition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the net construction when the family oscillates more than
/// the requested alpha allows at the requested delta.
class AlphaTooSmall : public DomainError {
 public:
  AlphaTooSmall(double omega, double alpha)
      : DomainError("alpha too small for delta: omega(delta) = " +
                    std::to_string(omega) + " > alpha = " +
                    std::to_string(alpha)),
        omega_(omega),
        alpha_(alpha) {}

  double omega() const noexcept { return omega_; }
  double alpha() const noexcept { return alpha_; }

 private:
  double omega_;
  double alpha_;
};

class QuantizationRangeError : public DomainError {
 public:
  QuantizationRangeError(double norm, double bound)
      : DomainError("quantization range exceeded: |value| = " +
                    std::to_string(norm) + " > bound = " +
                    std::to_string(bound)),
        norm_(norm) {}

  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

}  // namespace nck
