#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hms {

enum class Parity { Even = 0, Odd = 1 };

// Truncated dimension series over (Z/2 parity) x (weight in [-N, N]).
class GradedSeries {
public:
  GradedSeries() : GradedSeries(0) {}
  explicit GradedSeries(int trunc)
      : trunc_(trunc), even_(2 * trunc + 1, 0), odd_(2 * trunc + 1, 0) {}

  int trunc() const { return trunc_; }

  int64_t at(Parity p, int w) const {
    if (w < -trunc_ || w > trunc_) return 0;
    return (p == Parity::Even ? even_ : odd_)[size_t(w + trunc_)];
  }
  void add(Parity p, int w, int64_t v) {
    if (w < -trunc_ || w > trunc_) return;
    (p == Parity::Even ? even_ : odd_)[size_t(w + trunc_)] += v;
  }

  bool is_zero() const;
  bool odd_part_zero() const;
  bool even_part_zero() const;

  bool operator==(const GradedSeries&) const = default;

  // entrywise equality over the shared truncation window
  static bool equal_on_shared_window(const GradedSeries& a, const GradedSeries& b);
  // first disagreement (parity, weight) on the shared window, if any
  static bool first_mismatch(const GradedSeries& a, const GradedSeries& b, Parity& p, int& w);

  std::string str() const;

private:
  int trunc_;
  std::vector<int64_t> even_, odd_;
};

}  // namespace hms
