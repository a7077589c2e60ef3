#pragma once

#include <random>

#include "qe3/algebra.hpp"

namespace qe3::testing {

inline double draw(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random canonical lambda* triple for the given group.
inline Vec3 random_lambda(GroupTag tag, std::mt19937& rng) {
  auto pos = [&] { return draw(rng, 0.2, 5.0); };
  switch (tag) {
    case GroupTag::Nil: return {pos(), 0.0, 0.0};
    case GroupTag::SL2R: return {pos(), pos(), -pos()};
    case GroupTag::E11: return {pos(), -pos(), 0.0};
    case GroupTag::E2: return {pos(), pos(), 0.0};
    case GroupTag::R3: return {0.0, 0.0, 0.0};
    case GroupTag::SU2: return {pos(), pos(), pos()};
  }
  return {0.0, 0.0, 0.0};
}

inline constexpr GroupTag kAllGroups[] = {GroupTag::Nil, GroupTag::SL2R,
                                          GroupTag::E11, GroupTag::E2,
                                          GroupTag::R3,  GroupTag::SU2};

}  // namespace qe3::testing
