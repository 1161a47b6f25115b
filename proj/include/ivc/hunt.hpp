#pragma once

#include <cstdint>
#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/io.hpp"
#include "ivc/pathfactor.hpp"

namespace ivc {

struct HuntConfig {
  std::size_t k = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  SearchConfig search;
};

/// Trials whose search did not find a factor. `oracle_confirmed` is set
/// when the exhaustive oracle also found none, which makes the instance a
/// simple graph without a proper path-factor.
struct HuntRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  SearchStatus status = SearchStatus::Unknown;
  std::uint64_t nodes = 0;
  bool oracle_confirmed = false;
  BipartiteMultigraph graph;
};

struct HuntReport {
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t found = 0;
  std::size_t none = 0;
  std::size_t unknown = 0;
  std::uint64_t total_nodes = 0;
  std::vector<HuntRecord> archived;  // ascending trial index
};

/// Trial i searches random_34_biregular(k, seed + i, simple). A search
/// answer of "none" is re-checked by oracle_path_factor; if the oracle finds
/// a factor the two disagree and InvariantError is thrown. The report does
/// not depend on `jobs`.
HuntReport run_hunt(const HuntConfig& config);

Json hunt_report_to_json(const HuntReport& report);

}  // namespace ivc
