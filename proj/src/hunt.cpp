#include "ivc/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ivc/errors.hpp"
#include "ivc/generators.hpp"
#include "ivc/oracle.hpp"

namespace ivc {

namespace {

struct TrialResult {
  SearchStatus status = SearchStatus::Unknown;
  std::uint64_t nodes = 0;
  bool oracle_confirmed = false;
  BipartiteMultigraph graph;
};

TrialResult run_trial(const HuntConfig& config, std::uint64_t seed) {
  TrialResult r;
  BipartiteMultigraph g = random_34_biregular(config.k, seed, true);
  const FactorSearchResult s = search_proper_path_factor(g, config.search);
  r.status = s.status;
  r.nodes = s.nodes;
  if (s.status == SearchStatus::Found) {
    if (!check_proper_path_factor(g, *s.factor))
      throw InvariantError("search returned an invalid factor for seed " +
                           std::to_string(seed));
    return r;
  }
  if (s.status == SearchStatus::None) {
    if (oracle_path_factor(g))
      throw InvariantError("search and oracle disagree for seed " +
                           std::to_string(seed));
    r.oracle_confirmed = true;
  }
  r.graph = std::move(g);
  return r;
}

}  // namespace

HuntReport run_hunt(const HuntConfig& config) {
  std::vector<TrialResult> results(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.trials) return;
      try {
        results[i] = run_trial(config, config.seed + i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.trials;
        return;
      }
    }
  };

  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  HuntReport report;
  report.k = config.k;
  report.trials = config.trials;
  report.seed = config.seed;
  for (std::size_t i = 0; i < results.size(); ++i) {
    TrialResult& r = results[i];
    report.total_nodes += r.nodes;
    switch (r.status) {
      case SearchStatus::Found:
        ++report.found;
        continue;
      case SearchStatus::None:
        ++report.none;
        break;
      case SearchStatus::Unknown:
        ++report.unknown;
        break;
    }
    report.archived.push_back(
        {i, config.seed + i, r.status, r.nodes, r.oracle_confirmed,
         std::move(r.graph)});
  }
  return report;
}

Json hunt_report_to_json(const HuntReport& report) {
  Json archived = Json::array();
  for (const HuntRecord& r : report.archived)
    archived.push_back({{"trial", r.trial},
                        {"seed", r.seed},
                        {"status", to_string(r.status)},
                        {"nodes", r.nodes},
                        {"counterexample", r.oracle_confirmed},
                        {"graph", graph_to_json(r.graph)}});
  return {{"k", report.k},
          {"trials", report.trials},
          {"seed", report.seed},
          {"found", report.found},
          {"none", report.none},
          {"unknown", report.unknown},
          {"total_nodes", report.total_nodes},
          {"archived", archived}};
}

}  // namespace ivc
