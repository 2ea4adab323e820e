#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qml/parallel.hpp"

namespace qml {

struct Counterexample {
  std::uint64_t index = 0;
  std::string point;
  std::string detail;
};

/// Outcome of one exhaustive sweep.
struct CheckReport {
  static constexpr std::size_t kMaxListed = 25;

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failure_total = 0;
  /// The first kMaxListed failures in index order.
  std::vector<Counterexample> failures;
  /// Informational counters, reported but not asserted.
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> notes;

  bool passed() const { return failure_total == 0; }
  void count(const std::string& key, std::uint64_t by = 1) { counts[key] += by; }
  void fail(Counterexample c) {
    ++failure_total;
    if (failures.size() < kMaxListed) failures.push_back(std::move(c));
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) {
      if (failures.size() < kMaxListed) failures.push_back(f);
    }
    failure_total += other.failure_total;
    for (const auto& [k, v] : other.counts) counts[k] += v;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// Per-point result of a sweep: an optional failure plus counter tags.
struct PointOutcome {
  std::optional<std::string> failure;
  std::string point;
  std::vector<std::string> tags;
};

/// Runs fn(i) for i in [0, total) in contiguous chunks across workers and
/// merges the chunk reports in index order, so the result does not depend
/// on the worker count.
template <class Fn>
CheckReport sweep(const std::string& name, std::uint64_t total, unsigned workers, Fn&& fn) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64));
  auto parts = parallel_map<CheckReport>(static_cast<std::size_t>(chunks), workers, [&](std::size_t c) {
    CheckReport part;
    const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    for (std::uint64_t i = lo; i < hi; ++i) {
      PointOutcome o = fn(i);
      ++part.checked;
      for (const auto& t : o.tags) part.count(t);
      if (o.failure) part.fail({i, o.point, *o.failure});
    }
    return part;
  });
  CheckReport out;
  out.name = name;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace qml
