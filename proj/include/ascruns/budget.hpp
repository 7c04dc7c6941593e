#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ascruns {

// Thrown when a requested computation would exceed the configured resource
// budget. The CLI maps this to its own exit code, distinct from validation
// errors.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Resource limits for the exact computations.
///
/// The dense hitting-table recursion costs O(n * m^4) time in the worst
/// case, so desk-scale defaults are enforced and anything larger must be
/// requested explicitly (flags or the ASCRUNS_BUDGET environment variable).
struct Budget {
  int max_m = 64;
  int max_n = 5000;
  std::uint64_t max_enum_sequences = 10'000'000;

  void check_table(int m, int n) const;
  void check_enumeration(int m, int n) const;
};

/// m * (m-1)^(n-1), saturating at uint64 max.
std::uint64_t enum_sequence_count(int m, int n);

/// Parses a budget override such as "max_m=128,max_n=10000,max_enum=100000000".
/// Keys may appear in any order and missing keys keep the value from `base`.
Budget parse_budget_spec(const std::string& spec, Budget base = {});

}  // namespace ascruns
