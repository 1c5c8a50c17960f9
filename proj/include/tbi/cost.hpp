#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace tbi {

// Incentive cost with a dedicated "infeasible" value. Addition saturates:
// anything plus infinity is infinity, and infinity never compares equal to a
// finite cost.
class Cost {
 public:
  using value_type = std::int64_t;

  constexpr Cost() = default;
  constexpr explicit Cost(value_type v) : value_(v) {}

  static constexpr Cost infinity() { return Cost(kInf); }

  constexpr bool finite() const { return value_ != kInf; }
  constexpr bool infinite() const { return value_ == kInf; }

  // Only meaningful for finite costs.
  constexpr value_type value() const { return value_; }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (a.infinite() || b.infinite()) return infinity();
    return Cost(a.value_ + b.value_);
  }
  constexpr Cost& operator+=(Cost o) { return *this = *this + o; }

  friend constexpr bool operator==(Cost, Cost) = default;
  friend constexpr auto operator<=>(Cost, Cost) = default;

  friend std::ostream& operator<<(std::ostream& os, Cost c) {
    if (c.infinite()) return os << "inf";
    return os << c.value_;
  }

 private:
  static constexpr value_type kInf = std::numeric_limits<value_type>::max();
  value_type value_ = 0;
};

constexpr Cost min(Cost a, Cost b) { return b < a ? b : a; }

}  // namespace tbi
