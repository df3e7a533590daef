#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace far {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A membership vector with no elements.
class Empty : public Error {
 public:
  Empty() : Error("membership vector is empty") {}
  explicit Empty(const std::string& what) : Error(what) {}
};

// A grade outside [0, 1] (or NaN) at a given index.
class OutOfRange : public Error {
 public:
  OutOfRange(std::size_t index, double value)
      : Error("grade at index " + std::to_string(index) + " is outside [0, 1]: " +
              std::to_string(value)),
        index_(index),
        value_(value) {}

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

// Two vectors that must have equal lengths do not.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs,
                 const std::string& context = "vectors")
      : Error(context + " have mismatched lengths: " + std::to_string(lhs) +
              " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

// A hedge name that is not one of the recognized forms.
class UnknownHedge : public Error {
 public:
  explicit UnknownHedge(const std::string& name)
      : Error("unknown hedge: \"" + name + "\"") {}
};

// A slightly-tilted reference vector is required for this case but absent.
class MissingTiltVector : public Error {
 public:
  explicit MissingTiltVector(int case_id)
      : Error("case " + std::to_string(case_id) +
              " requires a slightly-tilted reference vector") {}
};

// A method was asked for a direction or operator it does not support.
class UnsupportedCombination : public Error {
 public:
  explicit UnsupportedCombination(const std::string& what) : Error(what) {}
};

// Experiment reports with differing method sets cannot be aggregated.
class InconsistentMethods : public Error {
 public:
  explicit InconsistentMethods(const std::string& what) : Error(what) {}
};

// A configuration document violates the input schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& reason)
      : Error("config error at " + path + ": " + reason),
        path_(path),
        reason_(reason) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace far
