#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuntz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid system description (spec file, multiplier/scalar-mode mismatch).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An argument outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Expression syntax or semantic error at a byte offset of the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::vector<std::string> expected = {})
      : Error(format(what, position, expected)), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& what, std::size_t pos,
                            const std::vector<std::string>& expected) {
    std::string msg = "at position " + std::to_string(pos) + ": " + what;
    if (!expected.empty()) {
      msg += " (expected one of:";
      for (const auto& e : expected) msg += " " + e;
      msg += ")";
    }
    return msg;
  }
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Step-model evaluation requested at a level where an adjoint step is not integral.
class LevelError : public Error {
 public:
  LevelError(std::uint64_t requested, std::uint64_t required_divisor)
      : Error("level " + std::to_string(requested) + " is not divisible by " +
              std::to_string(required_divisor) + "; minimal valid level is " +
              std::to_string(required_divisor)),
        required_(required_divisor) {}
  std::uint64_t minimal_level() const { return required_; }

 private:
  std::uint64_t required_;
};

/// The step-function model exists only for untwisted lexicographic systems.
class UnsupportedRepresentation : public Error {
 public:
  using Error::Error;
};

/// A construction hit a case excluded by its standing hypothesis.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cuntz
