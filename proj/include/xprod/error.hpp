#pragma once

#include <stdexcept>
#include <string>

namespace xprod {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotSubmultiplicative,
  NotMultiplicative,
  DimensionMismatch,
  NotHomomorphism,
  NotInvertible,
  CovarianceViolated,
  FlavorMismatch,
  KernelNotIdeal,
  HypothesisViolated,
  KernelNotRespected,
  NotNonDegenerate,
  NotCentralizer,
  NotCommuting,
  NoApproximateIdentity,
  InvalidConfig,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}
  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

} // namespace xprod
