// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"
#include "ivc/coloring.hpp"
#include "ivc/errors.hpp"
#include "ivc/generators.hpp"
#include "ivc/io.hpp"
#include "ivc/oracle.hpp"
#include "ivc/pathfactor.hpp"
#include "ivc/transversal.hpp"
#include "support.hpp"

namespace {

using namespace ivc;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool all_lengths(const PathFactor& f, std::size_t len) {
  for (const Path& p : f.paths)
    if (p.length() != len) return false;
  return true;
}

std::set<int> used_colors(const EdgeColoring& c) {
  return {c.colors.begin(), c.colors.end()};
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(IVC_CLI_PATH) + " " + args;
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// ---------------------------------------------------------------------------

Outcome subset_reproduction() {
  const auto t0 = Clock::now();
  const auto s = subset_graph_6();
  const bool shape = s.graph.x_count() == 20 && s.graph.y_count() == 15 &&
                     is_biregular(s.graph, 3, 4);
  const bool factor = check_proper_path_factor(s.graph, s.factor) &&
                      s.factor.paths.size() == 5 && all_lengths(s.factor, 6);
  const EdgeColoring c = color_from_factor(s.graph, s.factor);
  const bool colors = check_interval(s.graph, c) &&
                      used_colors(c) == std::set<int>{1, 2, 3, 4, 5, 6};
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "shape=" << shape << " factor=" << factor << " colors=" << colors
    << " time=" << t << "s";
  return {shape && factor && colors && t < 1.0, d.str()};
}

Outcome subset_no_full3() {
  const auto t0 = Clock::now();
  const bool none = !oracle_full_3regular(subset_graph_6().graph).has_value();
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "oracle=" << (none ? "none" : "found") << " time=" << t << "s";
  return {none && t < 60.0, d.str()};
}

Outcome eight_triples() {
  const auto t0 = Clock::now();
  const auto g = eight_triples_graph();
  const auto any = search_proper_path_factor(g);
  SearchConfig six;
  six.lengths = {6};
  const auto p7 = search_proper_path_factor(g, six);
  const bool found = any.status == SearchStatus::Found &&
                     check_proper_path_factor(g, *any.factor);
  const bool all6 = p7.status == SearchStatus::Found &&
                    check_proper_path_factor(g, *p7.factor) &&
                    all_lengths(*p7.factor, 6);
  const bool none = !oracle_full_3regular(g).has_value();
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "factor=" << found << " all-length-6=" << all6
    << " full3=" << (none ? "none" : "found") << " time=" << t << "s";
  return {found && all6 && none && t < 60.0, d.str()};
}

Outcome claw_separation() {
  const auto t0 = Clock::now();
  const auto g = claw_triple_graph();
  const auto cert = oracle_full_3regular(g);
  const bool full3 = cert && check_full_3regular(g, *cert);
  const bool no_factor = !oracle_path_factor(g).has_value();
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "full3=" << (full3 ? "found" : "none")
    << " factor=" << (no_factor ? "none" : "found") << " time=" << t << "s";
  return {full3 && no_factor && t < 5.0, d.str()};
}

Outcome lower_bound() {
  const auto t0 = Clock::now();
  const auto g = k34();
  const bool five = !oracle_interval_coloring(g, 5).has_value();
  const auto c6 = oracle_interval_coloring(g, 6);
  const bool six = c6 && check_interval(g, *c6);
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "k=5:" << (five ? "none" : "found") << " k=6:" << (six ? "found" : "none")
    << " time=" << t << "s";
  return {five && six && t < 10.0, d.str()};
}

Outcome coloring_on_random() {
  std::size_t tried = 0, colored = 0;
  for (std::uint64_t seed = 1; tried < 200; ++seed) {
    const std::size_t k = 1 + seed % 3;
    const auto g = random_34_biregular(k, seed, true);
    const auto r = search_proper_path_factor(g);
    if (r.status != SearchStatus::Found) continue;
    ++tried;
    try {
      const EdgeColoring c = color_from_factor(g, *r.factor);
      if (check_interval(g, c) && c.palette_size == 6) ++colored;
    } catch (const Error&) {
    }
  }
  std::ostringstream d;
  d << colored << "/" << tried << " verified";
  return {colored == tried, d.str()};
}

// Half-factor of a (2,4)-graph checked from degrees: every X-vertex keeps one
// edge and every Y-vertex two, so each component is x - y - x.
bool half_by_degrees(const BipartiteMultigraph& h, const std::vector<EdgeId>& es) {
  std::vector<int> dx(h.x_count(), 0), dy(h.y_count(), 0);
  std::set<EdgeId> seen;
  for (EdgeId e : es) {
    if (e >= h.edge_count() || !seen.insert(e).second) return false;
    ++dx[h.edge(e).x];
    ++dy[h.edge(e).y];
  }
  for (int d : dx)
    if (d != 1) return false;
  for (int d : dy)
    if (d != 2) return false;
  return true;
}

Outcome euler_half_factors() {
  std::size_t ok = 0, total = 0;
  for (const auto& g : test::random_with_y_cover(100, 1, false, 3)) {
    ++total;
    const Subgraph h = test::remove_y(g, *find_y_cover(g));
    const HalfFactor even = p3_half_factor(h.graph, Parity::Even);
    const HalfFactor odd = p3_half_factor(h.graph, Parity::Odd);
    std::vector<int> hits(h.graph.edge_count(), 0);
    for (EdgeId e : even.edges) ++hits[e];
    for (EdgeId e : odd.edges) ++hits[e];
    const bool partition =
        std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; });
    if (partition && half_by_degrees(h.graph, even.edges) &&
        half_by_degrees(h.graph, odd.edges) && is_half_factor(h.graph, even) &&
        is_half_factor(h.graph, odd))
      ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << total << " graphs with both parities valid and partitioning";
  return {ok == total && total == 100, d.str()};
}

Outcome via24_pipeline() {
  std::ostringstream d;
  bool pass = true;

  const auto s = subset_graph_6();
  const auto rs = p7_factor_via_24(s.graph);
  const bool subset_ok = rs.status == Via24Status::Found &&
                         check_proper_path_factor(s.graph, *rs.factor) &&
                         all_lengths(*rs.factor, 6);
  if (!subset_ok) {
    pass = false;
    // Independent check of why: no 5-set of Y has disjoint neighborhoods
    // covering X.
    const bool no_cover = !test::brute_y_cover(s.graph).has_value();
    d << "subset6: " << (rs.status == Via24Status::NoYCover ? "no exact Y-cover"
                                                            : "failed")
      << (no_cover ? " (confirmed over all 3003 Y-subsets of size 5)" : "")
      << "; ";
  } else {
    d << "subset6: ok; ";
  }

  const auto rk = p7_factor_via_24(k34());
  const bool k34_ok = rk.status == Via24Status::Found &&
                      check_proper_path_factor(k34(), *rk.factor) &&
                      all_lengths(*rk.factor, 6);
  pass = pass && k34_ok;
  d << "K34: " << (k34_ok ? "ok" : "failed") << "; ";

  std::size_t total = 0, good = 0, degenerate = 0, invalid = 0;
  for (const auto& g : test::random_with_y_cover(200, 40'000, true, 3)) {
    ++total;
    const auto r = p7_factor_via_24(g);
    if (r.status == Via24Status::Found) {
      if (r.factor && check_proper_path_factor(g, *r.factor) &&
          all_lengths(*r.factor, 6))
        ++good;
      else
        ++invalid;
    } else if (r.status == Via24Status::Degenerate) {
      ++degenerate;
    } else {
      ++invalid;
    }
  }
  const bool random_ok = invalid == 0 && (good + degenerate) * 10 >= total * 9;
  pass = pass && random_ok;
  d << "random: " << good << " valid, " << degenerate << " degenerate, "
    << invalid << " invalid of " << total;
  return {pass, d.str()};
}

Outcome two_switch_closure() {
  const auto t0 = Clock::now();
  const auto w = eight_triples_with_factor();
  const auto mask = factor_edge_mask(w.graph, w.factor);
  EdgeId e = 0;
  while (mask[e]) ++e;
  const auto s = two_switch(w.graph, w.factor, e, w.graph, w.factor, e);
  const bool shape = s.graph.vertex_count() == 28 && is_simple(s.graph) &&
                     is_biregular(s.graph, 3, 4);
  const bool connected = is_two_edge_connected(s.graph);
  const bool factor =
      check_proper_path_factor(s.graph, s.factor) && all_lengths(s.factor, 6);
  const bool none = !oracle_full_3regular(s.graph).has_value();
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "28-vertex simple=" << shape << " 2-edge-connected=" << connected
    << " P7-factor=" << factor << " full3=" << (none ? "none" : "found")
    << " time=" << t << "s";
  return {shape && connected && factor && none && t < 600.0, d.str()};
}

// Enumerates every transversal of the triple system and applies `pred` to
// each component; true if some transversal satisfies it on all components.
bool some_transversal(const FConstruction& fc,
                      const std::function<bool(const FStarComponent&,
                                               const std::vector<std::size_t>&)>& pred) {
  const std::size_t k = fc.triples.triples.size();
  const auto comps = fstar_components(fc.f, fc.triples);
  std::vector<std::size_t> pick(k, 0), chosen(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = fc.triples.triples[i][pick[i]];
    bool ok = true;
    for (const auto& c : comps) ok = ok && pred(c, chosen);
    if (ok) return true;
    std::size_t i = 0;
    while (i < k && ++pick[i] == 3) pick[i++] = 0;
    if (i == k) return false;
  }
}

Outcome no_mixed_transversal() {
  const auto t0 = Clock::now();
  const FConstruction fc = no_mixed_transversal_instance();
  const bool connected = fstar_components(fc.f, fc.triples).size() == 1;
  const bool none = !find_mixed_transversal(fc.f, fc.triples).has_value();

  const FConstruction f1 = independent_obstruction(12);
  const FConstruction f2 = spread_obstruction(8);
  const auto f1_comps = fstar_components(f1.f, f1.triples);
  const bool f1_search =
      std::any_of(f1_comps.begin(), f1_comps.end(), [&](const FStarComponent& c) {
        return !find_independent_transversal(f1.f, f1.triples, c).has_value();
      });
  const auto f2_comps = fstar_components(f2.f, f2.triples);
  const bool f2_search =
      std::any_of(f2_comps.begin(), f2_comps.end(), [&](const FStarComponent& c) {
        return !find_spread_transversal(f2.f, f2.triples, c).has_value();
      });
  // Enumeration over all 3^12 and 3^8 transversals.
  const bool f1_enum = !some_transversal(f1, [&](const auto& c, const auto& ch) {
    return is_independent_on(f1.f, f1.triples, c, ch);
  });
  const bool f2_enum = !some_transversal(f2, [&](const auto& c, const auto& ch) {
    return is_spread_on(f2.f, f2.triples, c, ch);
  });
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "F* connected=" << connected << " mixed=" << (none ? "none" : "found")
    << " F1 independent=" << (f1_search ? "none" : "found") << "/"
    << (f1_enum ? "none" : "found") << " (search/enumeration)"
    << " F2 spread=" << (f2_search ? "none" : "found") << "/"
    << (f2_enum ? "none" : "found")
    << " time=" << t << "s";
  return {connected && none && f1_search && f1_enum && f2_search && f2_enum &&
              t < 300.0,
          d.str()};
}

Outcome transversal_chain() {
  static constexpr std::array<std::array<int, 3>, 6> kPerms = {
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  const auto g = k34();
  std::size_t ok = 0;
  std::ostringstream d;
  const auto full = search_full_3regular(g);
  if (!full.certificate) return {false, "no full 3-regular subgraph found"};
  // The certificate coloring goes through proper_3_edge_color on the
  // certificate subgraph.
  const std::vector<int> base = color_certificate(g, *full.certificate);
  for (std::size_t i = 0; i < kPerms.size(); ++i) {
    try {
      const auto colors = permute_colors(base, kPerms[i]);
      const FConstruction fc = build_f(g, *full.certificate, colors);
      const auto t = find_mixed_transversal(fc.f, fc.triples);
      if (!t) {
        d << "perm " << i << ": no transversal; ";
        continue;
      }
      const PathFactor f =
          factor_from_mixed_transversal(g, *full.certificate, colors, *t);
      const EdgeColoring c = color_from_factor(g, f);
      if (check_proper_path_factor(g, f) && check_interval(g, c) &&
          c.palette_size == 6)
        ++ok;
      else
        d << "perm " << i << ": invalid; ";
    } catch (const Error& e) {
      d << "perm " << i << ": " << e.what() << "; ";
    }
  }
  d << ok << "/6 permutations give a verified interval 6-coloring";
  return {ok == 6, d.str()};
}

Outcome oracle_agreement() {
  std::size_t total = 0, agree = 0, max_vertices = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t k = 1 + seed % 3;
    const auto g = random_34_biregular(k, 200'000 + seed, seed % 2 == 0);
    max_vertices = std::max(max_vertices, g.vertex_count());
    const auto r = search_proper_path_factor(g);
    const bool oracle = oracle_path_factor(g).has_value();
    ++total;
    if (r.status != SearchStatus::Unknown &&
        (r.status == SearchStatus::Found) == oracle)
      ++agree;
  }
  std::ostringstream d;
  d << agree << "/" << total << " agree (at most " << max_vertices
    << " vertices)";
  return {agree == total && total >= 500 && max_vertices <= 21, d.str()};
}

Outcome hunt_smoke() {
  const auto t0 = Clock::now();
  const CliRun serial = run_cli("hunt --k 2 --trials 500 --seed 1 --jobs 1");
  const CliRun parallel = run_cli("hunt --k 2 --trials 500 --seed 1 --jobs 8");
  const bool identical = serial.out == parallel.out && serial.code == parallel.code;
  std::ostringstream d;
  std::size_t none = 0, counterexamples = 0, found = 0;
  try {
    const Json j = Json::parse(serial.out);
    none = j.at("none").get<std::size_t>();
    counterexamples = j.at("counterexamples").get<std::size_t>();
    found = j.at("found").get<std::size_t>();
  } catch (const std::exception& e) {
    return {false, std::string("unreadable hunt report: ") + e.what()};
  }
  d << "exit=" << serial.code << " found=" << found << " none=" << none
    << " counterexamples=" << counterexamples
    << " jobs1==jobs8:" << (identical ? "yes" : "no")
    << " time=" << seconds_since(t0) << "s";
  return {serial.code == 0 && none == 0 && counterexamples == 0 && identical,
          d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"subset graph: shape, listed factor, exact 6-coloring", subset_reproduction},
      {"subset graph: no full 3-regular subgraph", subset_no_full3},
      {"eight triples: P7-factor, no full 3-regular subgraph", eight_triples},
      {"claw multigraph: full 3-regular subgraph, no path-factor", claw_separation},
      {"K_{3,4}: no interval 5-coloring, interval 6-coloring", lower_bound},
      {"coloring from factor on 200 random simple instances", coloring_on_random},
      {"Eulerian half-factors on 100 random (2,4)-graphs", euler_half_factors},
      {"P7-factor via Y-cover", via24_pipeline},
      {"two-switch closure on eight-triples copies", two_switch_closure},
      {"no mixed transversal instance", no_mixed_transversal},
      {"transversal chain on K_{3,4} for all color permutations", transversal_chain},
      {"search and oracle agreement", oracle_agreement},
      {"hunt smoke test", hunt_smoke},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
              << criteria[i].first << " -- " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
