#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/poly.hpp"

namespace qcong {

/// Outcome of one verification. holds is true exactly when remainder is the
/// zero polynomial; finalize() enforces that.
struct CongruenceReport {
  std::string family;
  /// Named integer parameters in insertion order (always includes n and k).
  std::vector<std::pair<std::string, std::int64_t>> params;
  /// Factorial-ratio spec string, empty when not applicable.
  std::string spec;
  bool holds = false;
  Poly remainder;
  /// Free-form note: the mismatching coefficient, the reduced value, ...
  std::string detail;
  /// Set when the case could not be evaluated (precondition violated).
  std::string error;
  std::chrono::nanoseconds elapsed{0};

  CongruenceReport& set(std::string name, std::int64_t value);
  std::optional<std::int64_t> param(std::string_view name) const;
  CongruenceReport& finalize() {
    holds = error.empty() && remainder.is_zero();
    return *this;
  }
};

/// Measures wall time into a report's elapsed field.
class ReportTimer {
 public:
  explicit ReportTimer(CongruenceReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start_);
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  CongruenceReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qcong
