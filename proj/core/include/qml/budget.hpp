#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "qml/error.hpp"

namespace qml {

/// Shared step counter for exhaustive enumerations. Every candidate tuple,
/// point or group element visited costs one step; running out throws
/// BudgetExceeded. Thread-safe.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = default_limit()) : limit_(limit) {
    if (limit_ == 0) throw InvalidArgument("budget must be positive");
  }
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  /// kDefaultLimit, or QML_BUDGET from the environment when set.
  static std::uint64_t default_limit() {
    if (const char* env = std::getenv("QML_BUDGET")) {
      char* end = nullptr;
      auto v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultLimit;
  }

  static Budget& unlimited() {
    static Budget b(UINT64_MAX);
    return b;
  }

  void charge(std::uint64_t steps = 1, const char* what = "enumeration") {
    auto before = used_.fetch_add(steps, std::memory_order_relaxed);
    if (before + steps > limit_ || before + steps < before)
      throw BudgetExceeded(std::string(what) + " exceeded the budget of " + std::to_string(limit_) + " steps");
  }

  /// Fails up front when a known-size enumeration cannot fit.
  void require(std::uint64_t steps, const char* what) const {
    if (steps > remaining())
      throw BudgetExceeded(std::string(what) + " needs " + std::to_string(steps) + " steps, only " +
                           std::to_string(remaining()) + " of " + std::to_string(limit_) + " remain");
  }

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t remaining() const {
    auto u = used();
    return u >= limit_ ? 0 : limit_ - u;
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// a^b saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > UINT64_MAX / a) return UINT64_MAX;
    r *= a;
  }
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace qml
