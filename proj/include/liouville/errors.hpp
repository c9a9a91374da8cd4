#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

/// Point or curve outside the open parameter domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure could not reach its requested tolerance.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pole or vanishing denominator inside the evaluation region.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Metric coefficients fail positive-definiteness.
class InvalidMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A geodesic radicand sqrt(U - a) or sqrt(a + V) went negative.
class TurningPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace liouville
