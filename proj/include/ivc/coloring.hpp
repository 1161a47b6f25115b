#pragma once

#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"

namespace ivc {

/// Interval 6-coloring of a (3,4)-biregular graph from a proper path-factor.
/// Factor edges get colors from {1,2,5,6} and the remaining edges colors
/// from {3,4}. Arbitrary choices are fixed by lowest edge id. The result is
/// checked for properness and the interval property before it is returned;
/// a failed check raises InvariantError. An invalid factor raises
/// CheckError.
EdgeColoring color_from_factor(const BipartiteMultigraph& g,
                               const PathFactor& factor);

struct VertexColors {
  VertexId vertex;
  std::vector<int> colors;  // sorted
  int low = 0;
  int high = 0;
  bool interval = false;
};

/// Incident colors of every vertex, X-vertices first.
std::vector<VertexColors> color_summary(const BipartiteMultigraph& g,
                                        const EdgeColoring& coloring);

}  // namespace ivc
