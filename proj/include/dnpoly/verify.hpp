#ifndef DNPOLY_VERIFY_HPP
#define DNPOLY_VERIFY_HPP

// The acceptance suite: eleven property and oracle checks with pinned sizes
// and time budgets. A criterion passes only if its property holds and it
// finishes inside its budget.

#include <cstdint>
#include <string>
#include <vector>

namespace dnpoly {

inline constexpr int kCriterionCount = 11;

/// Recorded once from the exhaustive sweep and pinned.
inline constexpr std::size_t kTorsionPartsN4 = 500;
inline constexpr std::size_t kTorsionPartsN5 = 3084;

inline constexpr std::size_t kRandomDiagrams = 1'000'000;
inline constexpr std::size_t kSampledPairs = 100'000;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool held = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool passed() const { return held && seconds <= budget_seconds; }
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed2024;
  int workers = 0;  // 0: worker_count()
};

/// "all" or a comma separated list of criterion numbers. Throws
/// std::invalid_argument on anything else.
std::vector<int> parse_suite(const std::string& text);

CriterionResult run_criterion(int id, const VerifyOptions& opts = {});

/// "PASS  C4 mutation bijectivity (0.41 s / 120 s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace dnpoly

#endif  // DNPOLY_VERIFY_HPP
