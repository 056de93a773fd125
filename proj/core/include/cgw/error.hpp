#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgw {

// Base of everything the library throws on bad input or exhausted resources.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed, unknown, or out-of-range user input.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t offset, std::size_t line,
              std::size_t column)
      : InputError(what + " at offset " + std::to_string(offset) + " (line " +
                   std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        offset_(offset),
        line_(line),
        column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// An element of one engine was handed to another.
class EngineMismatch : public InputError {
 public:
  using InputError::InputError;
};

// The engine cannot answer this query exactly (e.g. class keys in an HNN
// extension).
class CapabilityError : public InputError {
 public:
  using InputError::InputError;
};

// A group expression that parses but cannot be turned into an engine.
class UnsupportedComposition : public InputError {
 public:
  using InputError::InputError;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t radius_reached)
      : Error(what + " (completed radius " + std::to_string(radius_reached) +
              ")"),
        radius_reached_(radius_reached) {}

  // Largest radius (or enumeration depth) fully completed before the abort.
  std::size_t radius_reached() const noexcept { return radius_reached_; }

 private:
  std::size_t radius_reached_;
};

}  // namespace cgw
