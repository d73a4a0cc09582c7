#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chow {

struct CheckRecord {
  std::string name;
  std::string params;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct VerifyConfig {
  int gmax = 8;
  int nmax = 3;
  int mmax = 4;
  /// Oracle comparisons are limited to g <= this bound.
  int oracle_gmax = 6;
  std::size_t oracle_samples = 5;
  std::uint64_t seed = 20240611;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::size_t failures() const;
};

/// Sweeps the invariant suite over 2 <= g <= gmax, 1 <= n <= nmax,
/// 1 <= m <= mmax. One task per g runs concurrently.
VerificationReport run_verification(const VerifyConfig& config);

/// Aligned table plus a summary line.
std::string to_text(const VerificationReport& report);
/// {"checks":[{name,params,expected,got,pass}...],"total":N,"failures":F}
std::string to_json(const VerificationReport& report);

}  // namespace chow
