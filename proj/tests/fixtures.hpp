#pragma once

#include <map>
#include <memory>
#include <utility>

#include "orbitweyl/exotic.hpp"

namespace testing_support {

using namespace orbitweyl;

// One built algebra shared across test cases (construction dominates runtime).
struct Built {
  std::unique_ptr<Chart> chart;
  std::unique_ptr<ExoticBuilder> builder;
  DiffOp d0;
  std::unique_ptr<ExoticFamily> family;

  const AlgebraSpec& spec() const { return chart->spec(); }
};

inline Built& built(Family fam, int N) {
  static std::map<std::pair<Family, int>, std::unique_ptr<Built>> cache;
  auto& slot = cache[{fam, N}];
  if (!slot) {
    slot = std::make_unique<Built>();
    slot->chart = std::make_unique<Chart>(build_algebra(fam, N));
    slot->builder = std::make_unique<ExoticBuilder>(*slot->chart);
    slot->d0 = slot->builder->build_D0(expected_q(slot->chart->spec()));
  }
  return *slot;
}

inline const ExoticFamily& family(Family fam, int N) {
  Built& b = built(fam, N);
  if (!b.family) b.family = std::make_unique<ExoticFamily>(generate_family(*b.chart, b.d0));
  return *b.family;
}

}  // namespace testing_support
