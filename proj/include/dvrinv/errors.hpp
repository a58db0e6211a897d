#pragma once

#include <stdexcept>
#include <string>

namespace dvrinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |G| is not a unit of the DVR; averaging and everything downstream is off.
class HypothesisViolation : public Error {
 public:
  explicit HypothesisViolation(const std::string& what)
      : Error("violates the DVR hypothesis: " + what) {}
};

// An element expected in O has a denominator of positive valuation.
class NotInRing : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// Group closure or matrix order ran past the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input documents or scalar strings.
class InputError : public Error {
 public:
  using Error::Error;
};

// A relation guaranteed by the theory failed to hold on concrete data.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dvrinv
