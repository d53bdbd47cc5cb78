#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nps {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction or computation would exceed a configured order cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: non-bijective permutation, bad family parameters,
/// non-normal subgroup, non-automorphism action and so on.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a presentation or family spec string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nps
