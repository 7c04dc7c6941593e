#include "ascruns/budget.hpp"

#include <charconv>
#include <limits>

namespace ascruns {

void Budget::check_table(int m, int n) const {
  if (m > max_m) {
    throw BudgetError("m=" + std::to_string(m) + " exceeds budget max_m=" +
                      std::to_string(max_m));
  }
  if (n > max_n) {
    throw BudgetError("n=" + std::to_string(n) + " exceeds budget max_n=" +
                      std::to_string(max_n));
  }
}

void Budget::check_enumeration(int m, int n) const {
  const std::uint64_t count = enum_sequence_count(m, n);
  if (count > max_enum_sequences) {
    throw BudgetError("enumerating m=" + std::to_string(m) + ", n=" +
                      std::to_string(n) + " needs " + std::to_string(count) +
                      " sequences, over budget max_enum=" +
                      std::to_string(max_enum_sequences) +
                      "; use the DP oracle instead");
  }
}

std::uint64_t enum_sequence_count(int m, int n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = static_cast<std::uint64_t>(m);
  for (int k = 1; k < n; ++k) {
    const std::uint64_t factor = static_cast<std::uint64_t>(m - 1);
    if (count > kMax / factor) return kMax;
    count *= factor;
  }
  return count;
}

namespace {

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("invalid budget value '" + text + "'");
  }
  return value;
}

}  // namespace

Budget parse_budget_spec(const std::string& spec, Budget base) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("budget entry '" + item +
                                  "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "max_m") {
      base.max_m = static_cast<int>(parse_u64(value));
    } else if (key == "max_n") {
      base.max_n = static_cast<int>(parse_u64(value));
    } else if (key == "max_enum") {
      base.max_enum_sequences = parse_u64(value);
    } else {
      throw std::invalid_argument("unknown budget key '" + key + "'");
    }
  }
  return base;
}

}  // namespace ascruns
