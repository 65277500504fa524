#pragma once

#include <string>

#include "fvs/check.hpp"

namespace fvs {

// A value in {0, 1/2, 1} stored as a doubled integer in {0, 1, 2}. All
// cover/packing arithmetic in this library runs on doubled integers so that
// every size comparison and duality certificate is an exact equality.
class Half {
 public:
  constexpr Half() = default;

  static constexpr Half zero() { return Half(0); }
  static constexpr Half half() { return Half(1); }
  static constexpr Half one() { return Half(2); }

  static Half from_doubled(int d) {
    require(d >= 0 && d <= 2, "Half::from_doubled: value out of range");
    return Half(d);
  }

  constexpr int doubled() const { return doubled_; }

  friend constexpr bool operator==(Half a, Half b) { return a.doubled_ == b.doubled_; }
  friend constexpr bool operator!=(Half a, Half b) { return a.doubled_ != b.doubled_; }

  std::string str() const { return doubled_ == 0 ? "0" : doubled_ == 1 ? "1/2" : "1"; }

 private:
  constexpr explicit Half(int d) : doubled_(static_cast<signed char>(d)) {}
  signed char doubled_ = 0;
};

// Renders a doubled-integer quantity as an exact fraction, e.g. 3 -> "3/2".
inline std::string fraction_str(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace fvs
