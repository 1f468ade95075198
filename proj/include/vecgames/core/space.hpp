#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vecgames/core/types.hpp"

namespace vecgames {

struct DiscreteSpace {
  std::int64_t n = 1;  // actions/observations are indices in [0, n)
};

struct BoxSpace {
  std::vector<double> low;
  std::vector<double> high;  // same length as low, low <= high elementwise
};

class Space {
 public:
  Space() : value_(DiscreteSpace{1}) {}
  Space(DiscreteSpace d);  // validates n >= 1
  Space(BoxSpace b);       // validates bounds

  static Space discrete(std::int64_t n) { return Space(DiscreteSpace{n}); }
  static Space box(std::vector<double> low, std::vector<double> high);

  bool is_discrete() const { return std::holds_alternative<DiscreteSpace>(value_); }
  bool is_box() const { return std::holds_alternative<BoxSpace>(value_); }

  const DiscreteSpace& as_discrete() const { return std::get<DiscreteSpace>(value_); }
  const BoxSpace& as_box() const { return std::get<BoxSpace>(value_); }

  bool contains(const Action& value) const;

  // True when every value in the space can be enumerated/tabulated exactly:
  // any Discrete space, or a Box whose bounds are all finite integers.
  bool is_tabular() const;

  std::string describe() const;

 private:
  std::variant<DiscreteSpace, BoxSpace> value_;
};

}  // namespace vecgames
