#pragma once

#include <stdexcept>
#include <string>

namespace thermnet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The network violates one of its structural invariants.
class InvalidNetwork : public Error {
 public:
  using Error::Error;
};

/// K (or another system matrix) is singular within the conditioning tolerance.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A cluster of zero-capacity nodes has no resistive path out (K11 singular).
class DegenerateNetwork : public Error {
 public:
  using Error::Error;
};

class UnknownOutputNode : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class PoleEvaluation : public Error {
 public:
  using Error::Error;
};

class PoleAtZero : public Error {
 public:
  using Error::Error;
};

class ZeroHvacPath : public Error {
 public:
  using Error::Error;
};

class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

/// Forward Euler was asked to take a step beyond its stability bound.
class UnstableStep : public Error {
 public:
  UnstableStep(const std::string& what, double max_stable_dt)
      : Error(what), max_stable_dt_(max_stable_dt) {}

  double max_stable_dt() const noexcept { return max_stable_dt_; }

 private:
  double max_stable_dt_;
};

/// Bad argument to an operation (schedule mismatch, non-positive step, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace thermnet
