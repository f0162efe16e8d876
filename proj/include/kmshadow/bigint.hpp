#pragma once

#include <gmpxx.h>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace kmshadow {

inline constexpr const char* kVersion = "0.1.0";

// Exact arbitrary-precision integer. Represented values and binomial
// coefficients live here; representation coefficients and orders stay
// machine-word.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Parses a nonnegative decimal numeral. Throws std::invalid_argument on
// anything else (sign, hex, empty, garbage).
BigInt parse_bigint(const std::string& text);

// Raised when a sweep or enumeration exceeds its resource budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optional wall-clock deadline shared by long-running sweeps.
struct Budget {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() { return {}; }
  static Budget from_seconds(double seconds) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    return b;
  }

  bool expired() const {
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
  void enforce(const char* what) const {
    if (expired()) throw BudgetError(std::string("budget exhausted during ") + what);
  }
};

}  // namespace kmshadow
