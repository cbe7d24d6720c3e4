#pragma once

#include <stdexcept>
#include <string>

namespace talex {

/// Input violates an operation's precondition (p does not divide alpha, even alpha, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live in different coefficient rings (e.g. two distinct moduli).
class RingMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A division that was required to be exact left a nonzero remainder.
class NonExactDivision : public std::runtime_error {
 public:
  NonExactDivision(const std::string& what, std::string remainder)
      : std::runtime_error(what + " (remainder: " + remainder + ")"),
        remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

/// An internal identity that must hold by construction did not.
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed.
class CrossCheckMismatch : public CertificateFailure {
 public:
  using CertificateFailure::CertificateFailure;
};

/// No generator assignment maps every relator to the identity.
class NoValidAssignment : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Every candidate denominator det(rep(g) - I) vanished.
class AllDenominatorsSingular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace talex
