#include "hms/series.hpp"

#include <sstream>

namespace hms {

bool GradedSeries::is_zero() const {
  for (auto v : even_)
    if (v) return false;
  return odd_part_zero();
}

bool GradedSeries::odd_part_zero() const {
  for (auto v : odd_)
    if (v) return false;
  return true;
}

bool GradedSeries::even_part_zero() const {
  for (auto v : even_)
    if (v) return false;
  return true;
}

bool GradedSeries::equal_on_shared_window(const GradedSeries& a, const GradedSeries& b) {
  Parity p;
  int w;
  return !first_mismatch(a, b, p, w);
}

bool GradedSeries::first_mismatch(const GradedSeries& a, const GradedSeries& b, Parity& p,
                                  int& w) {
  int n = std::min(a.trunc_, b.trunc_);
  for (int v = -n; v <= n; ++v) {
    if (a.at(Parity::Even, v) != b.at(Parity::Even, v)) {
      p = Parity::Even;
      w = v;
      return true;
    }
    if (a.at(Parity::Odd, v) != b.at(Parity::Odd, v)) {
      p = Parity::Odd;
      w = v;
      return true;
    }
  }
  return false;
}

std::string GradedSeries::str() const {
  std::ostringstream os;
  os << "even[";
  for (int w = -trunc_; w <= trunc_; ++w) {
    if (at(Parity::Even, w)) os << " " << w << ":" << at(Parity::Even, w);
  }
  os << " ] odd[";
  for (int w = -trunc_; w <= trunc_; ++w) {
    if (at(Parity::Odd, w)) os << " " << w << ":" << at(Parity::Odd, w);
  }
  os << " ]";
  return os.str();
}

}  // namespace hms
