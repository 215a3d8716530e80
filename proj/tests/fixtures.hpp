#pragma once

#include <vector>

#include "kschur/tableau.hpp"

namespace fixtures {

using kschur::KTableau;
using kschur::Mode;
using kschur::Partition;

/// The three 3-tableaux of shape (8,5,2,1) and 3-weight (1,3,1,2,1,1).
inline std::vector<KTableau> k3_weight_131211() {
  const Partition shape{8, 5, 2, 1};
  return {
      KTableau{3, shape, {}, {{1, 2, 2, 2, 3, 4, 4, 6}, {2, 3, 4, 4, 6}, {4, 6}, {5}}, Mode::column_strict},
      KTableau{3, shape, {}, {{1, 2, 2, 2, 3, 4, 4, 5}, {2, 3, 4, 4, 5}, {4, 5}, {6}}, Mode::column_strict},
      KTableau{3, shape, {}, {{1, 2, 2, 2, 4, 4, 5, 6}, {2, 4, 4, 5, 6}, {3, 6}, {4}}, Mode::column_strict},
  };
}

/// A 4-tableau of weight (2,1,4,2,3) and its images under the stages of τ_4.
struct TauExample {
  KTableau input, stage_1a, stage_1b, stage_2;
};

inline TauExample tau4_example() {
  const Partition shape{9, 5, 2, 2, 1};
  const auto make = [&](std::vector<int> bottom, std::vector<int> second) {
    return KTableau{4, shape, {}, {std::move(bottom), std::move(second), {3, 4}, {4, 5}, {5}}, Mode::column_strict};
  };
  return {
      make({1, 1, 3, 3, 3, 3, 5, 5, 5}, {2, 3, 5, 5, 5}),
      make({1, 1, 3, 3, 3, 3, 5, 4, 5}, {2, 3, 5, 5, 5}),
      make({1, 1, 3, 3, 3, 3, 4, 4, 5}, {2, 3, 5, 5, 5}),
      make({1, 1, 3, 3, 3, 3, 4, 4, 5}, {2, 3, 4, 4, 5}),
  };
}

/// Letter.residue tokens of the input above, top row first.
inline const char* tau4_input_rendered() {
  return "5.1\n"
         "4.2 5.3\n"
         "3.3 4.4\n"
         "2.4 3.0 5.1 5.2 5.3\n"
         "1.0 1.1 3.2 3.3 3.4 3.0 5.1 5.2 5.3\n";
}

}  // namespace fixtures
