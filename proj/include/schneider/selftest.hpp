#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schneider/dynamics.hpp"
#include "schneider/prime_context.hpp"

namespace schneider {

struct PropertyReport {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  /// The first few counterexamples, human readable.
  std::vector<std::string> failures;

  bool ok() const noexcept { return failed == 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::int64_t samples = 200;
  std::int64_t precision = 32;
  std::int64_t cap = kDefaultIterationCap;
};

/// Runs every property suite against random samples for one prime. The
/// suites are independent and run concurrently; the result order is fixed.
std::vector<PropertyReport> run_selftest(const PrimeContext& ctx, const SelftestOptions& options);

}  // namespace schneider
