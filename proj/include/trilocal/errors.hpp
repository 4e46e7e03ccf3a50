#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trilocal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on different embedding shapes.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A point or matrix fails a structural invariant (flag not preserved, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class SupportViolation : public Error {
 public:
  using Error::Error;
};

// A Frobenius ratio phi_i / phi_j lands in {1, q}.
class GenericityViolation : public Error {
 public:
  GenericityViolation(std::size_t i, std::size_t j, std::string ratio)
      : Error("genericity violated: phi_" + std::to_string(i + 1) + " / phi_" +
              std::to_string(j + 1) + " = " + ratio),
        i_(i),
        j_(j),
        ratio_(std::move(ratio)) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  const std::string& ratio() const { return ratio_; }

 private:
  std::size_t i_, j_;
  std::string ratio_;
};

// The default a-matrix is only trusted below n = 8.
class AMatrixGuard : public Error {
 public:
  using Error::Error;
};

// A computed identity that must hold exactly did not.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace trilocal
