#pragma once

#include <cstdint>

namespace plotkin {

// Instrumented operation counts for a decode. Sign flips, comparisons of real
// values, and additions of real values are tracked separately; the combined
// complexity measure counts comparisons plus additions and ignores signs.
struct OpCounter {
  uint64_t signs = 0;
  uint64_t comparisons = 0;
  uint64_t additions = 0;

  uint64_t ac_ops() const { return comparisons + additions; }

  void reset() { signs = comparisons = additions = 0; }

  OpCounter& operator+=(const OpCounter& o) {
    signs += o.signs;
    comparisons += o.comparisons;
    additions += o.additions;
    return *this;
  }

  friend OpCounter operator-(OpCounter a, const OpCounter& b) {
    a.signs -= b.signs;
    a.comparisons -= b.comparisons;
    a.additions -= b.additions;
    return a;
  }

  friend bool operator==(const OpCounter& a, const OpCounter& b) {
    return a.signs == b.signs && a.comparisons == b.comparisons && a.additions == b.additions;
  }
};

}  // namespace plotkin
