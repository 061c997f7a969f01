#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace adfbn {

/// Inputs referring to different argument sets.
class SignatureMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured size cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A solver or a timed computation ran out of its budget. Never a verdict.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Size guardrails for the exhaustive (oracle) paths.
struct Limits {
  unsigned max_state_bits = 20;        // 2^n states
  unsigned max_completion_bits = 20;   // 2^(#u) completions
  std::uint64_t max_interpretations = 4782969;  // 3^14

  static const Limits& defaults() {
    static const Limits limits{};
    return limits;
  }
};

/// Wall-clock deadline plus an optional cap on solver decisions.
struct Budget {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t max_decisions = 0;  // 0 = unbounded

  static Budget unlimited() { return {}; }

  static Budget seconds(double secs) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(secs));
    return b;
  }

  bool expired() const { return deadline && std::chrono::steady_clock::now() >= *deadline; }

  void check() const {
    if (expired()) throw BudgetExceeded("deadline reached");
  }
};

}  // namespace adfbn
