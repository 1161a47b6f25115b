// ivc: command-line front end for the interval-coloring toolkit.
//
// Exit codes: 0 success or verified, 1 definitive negative, 2 unknown or
// method not applicable, 3 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"
#include "ivc/coloring.hpp"
#include "ivc/errors.hpp"
#include "ivc/generators.hpp"
#include "ivc/hunt.hpp"
#include "ivc/io.hpp"
#include "ivc/oracle.hpp"
#include "ivc/pathfactor.hpp"
#include "ivc/transversal.hpp"

namespace {

using namespace ivc;

enum Exit : int { kOk = 0, kNegative = 1, kUnknown = 2, kInputError = 3 };

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw FormatError("cannot write " + out_path);
  out << text;
}

void emit_json(const std::string& out_path, const Json& j) {
  emit(out_path, j.dump(2) + "\n");
}

BipartiteMultigraph load_graph(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

BipartiteMultigraph load_34_graph(const std::string& path) {
  BipartiteMultigraph g = load_graph(path);
  if (!is_biregular(g, 3, 4))
    throw GraphError(path + " is not a (3,4)-biregular X,Y-bigraph");
  return g;
}

Json factor_stats(const PathFactor& f) {
  Json lengths = Json::array();
  for (const Path& p : f.paths) lengths.push_back(p.length());
  return lengths;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string family;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  bool simple = false;
  std::optional<EdgeId> e1, e2;
  std::string out;
  std::string factor_out;
};

// Lowest-id edge outside the factor.
EdgeId first_free_edge(const BipartiteMultigraph& g, const PathFactor& f) {
  const auto mask = factor_edge_mask(g, f);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!mask[e]) return e;
  throw GraphError("factor uses every edge");
}

int run_gen(const GenOptions& o) {
  std::optional<PathFactor> factor;
  Json graph;
  if (o.family == "subset6") {
    auto gf = subset_graph_6();
    graph = graph_to_json(gf.graph);
    factor = gf.factor;
  } else if (o.family == "eight-triples") {
    auto gf = eight_triples_with_factor();
    graph = graph_to_json(gf.graph);
    factor = gf.factor;
  } else if (o.family == "claw-triple") {
    graph = graph_to_json(claw_triple_graph());
  } else if (o.family == "k34") {
    graph = graph_to_json(k34());
  } else if (o.family == "random") {
    graph = graph_to_json(random_34_biregular(o.k, o.seed, o.simple));
  } else if (o.family == "two-switch") {
    const auto a = eight_triples_with_factor();
    const EdgeId e1 = o.e1.value_or(first_free_edge(a.graph, a.factor));
    const EdgeId e2 = o.e2.value_or(first_free_edge(a.graph, a.factor));
    auto gf = two_switch(a.graph, a.factor, e1, a.graph, a.factor, e2);
    graph = graph_to_json(gf.graph);
    factor = gf.factor;
  } else if (o.family == "no-mixed") {
    emit_json(o.out, fconstruction_to_json(no_mixed_transversal_instance()));
    return kOk;
  } else {
    throw CLI::ValidationError("--family", "unknown family " + o.family);
  }
  emit_json(o.out, graph);
  if (!o.factor_out.empty()) {
    if (!factor) throw CLI::ValidationError("--factor-out",
                                            o.family + " has no bundled factor");
    emit_json(o.factor_out, factor_to_json(*factor));
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// factor

struct FactorOptions {
  std::string in;
  std::string method = "search";
  std::uint64_t max_nodes = SearchConfig{}.max_nodes;
  std::vector<std::size_t> lengths = SearchConfig{}.lengths;
  int perm = 0;
  std::string out;
};

int run_factor(const FactorOptions& o) {
  const BipartiteMultigraph g = load_34_graph(o.in);
  Json report = {{"method", o.method}};
  std::optional<PathFactor> factor;
  int code = kOk;

  if (o.method == "search") {
    const auto r = search_proper_path_factor(g, {o.max_nodes, o.lengths});
    report["nodes"] = r.nodes;
    report["status"] = to_string(r.status);
    report["definitive"] = r.status != SearchStatus::Unknown;
    factor = r.factor;
    code = r.status == SearchStatus::Found  ? kOk
           : r.status == SearchStatus::None ? kNegative
                                            : kUnknown;
  } else if (o.method == "oracle") {
    factor = oracle_path_factor(g);
    report["status"] = factor ? "found" : "none";
    report["definitive"] = true;
    code = factor ? kOk : kNegative;
  } else if (o.method == "via24") {
    const auto r = p7_factor_via_24(g);
    report["attempts"] = r.attempts;
    report["y_cover"] = r.y_cover;
    factor = r.factor;
    switch (r.status) {
      case Via24Status::Found:
        report["status"] = "found";
        break;
      case Via24Status::NoYCover:
        report["status"] = "inapplicable";
        report["reason"] = "no exact Y-cover";
        code = kUnknown;
        break;
      case Via24Status::Degenerate:
        report["status"] = "unknown";
        report["reason"] = "every retry hit a degenerate component";
        code = kUnknown;
        break;
    }
    report["definitive"] = false;
  } else if (o.method == "transversal") {
    report["definitive"] = false;
    const auto full = search_full_3regular(g, {o.max_nodes});
    if (full.status != SearchStatus::Found) {
      report["status"] = "inapplicable";
      report["reason"] = full.status == SearchStatus::None
                             ? "no full 3-regular subgraph"
                             : "full 3-regular search hit its bound";
      code = kUnknown;
    } else {
      static constexpr std::array<std::array<int, 3>, 6> kPerms = {{
          {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
      const auto colors =
          permute_colors(color_certificate(g, *full.certificate), kPerms[o.perm]);
      const FConstruction fc = build_f(g, *full.certificate, colors);
      const auto t = find_mixed_transversal(fc.f, fc.triples);
      report["certificate"] = certificate_to_json(*full.certificate);
      if (!t) {
        report["status"] = "inapplicable";
        report["reason"] = "no mixed transversal";
        code = kUnknown;
      } else {
        report["status"] = "found";
        report["transversal"] = transversal_to_json(*t);
        factor = factor_from_mixed_transversal(g, *full.certificate, colors, *t);
      }
    }
  } else {
    throw CLI::ValidationError("--method", "unknown method " + o.method);
  }

  if (factor) {
    if (!check_proper_path_factor(g, *factor))
      throw InvariantError(o.method + " produced an invalid factor");
    report["lengths"] = factor_stats(*factor);
    if (!o.out.empty()) emit_json(o.out, factor_to_json(*factor));
  }
  std::cout << report.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------------------
// color

struct ColorOptions {
  std::string in;
  std::string factor;
  std::string out;
  std::string dot;
};

void print_summary(const BipartiteMultigraph& g, const EdgeColoring& c) {
  std::cout << std::left << std::setw(8) << "vertex" << std::setw(16)
            << "colors" << "interval\n";
  for (const VertexColors& vc : color_summary(g, c)) {
    std::string cs;
    for (int col : vc.colors) cs += (cs.empty() ? "" : ",") + std::to_string(col);
    std::cout << std::setw(8) << to_string(vc.vertex) << std::setw(16) << cs
              << (vc.interval ? "yes" : "NO") << '\n';
  }
}

int run_color(const ColorOptions& o) {
  const BipartiteMultigraph g = load_34_graph(o.in);
  const PathFactor f = factor_from_json(read_json_file(o.factor));
  if (auto why = explain_path_factor(g, f))
    throw CheckError("not a proper path-factor: " + *why);
  const EdgeColoring c = color_from_factor(g, f);
  if (!o.out.empty()) emit_json(o.out, coloring_to_json(c));
  if (!o.dot.empty()) emit(o.dot, to_dot(g, &c));
  print_summary(g, c);
  std::cout << "verified interval " << c.palette_size << "-coloring\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string in;
  std::string factor;
  std::string coloring;
  std::string certificate;
  std::string oracle;
  int colors = 6;
};

int run_verify(const VerifyOptions& o) {
  const BipartiteMultigraph g = load_graph(o.in);
  bool all_ok = true;
  auto line = [&](const std::string& what, bool ok, const std::string& why) {
    std::cout << what << ": " << (ok ? "valid" : "INVALID");
    if (!why.empty()) std::cout << " (" << why << ")";
    std::cout << '\n';
    all_ok = all_ok && ok;
  };
  std::cout << "graph: " << g.x_count() << " X, " << g.y_count() << " Y, "
            << g.edge_count() << " edges, "
            << (is_biregular(g, 3, 4) ? "(3,4)-biregular" : "not (3,4)-biregular")
            << (is_simple(g) ? ", simple" : ", has parallel edges") << '\n';

  if (!o.factor.empty()) {
    const auto why = explain_path_factor(g, factor_from_json(read_json_file(o.factor)));
    line("factor", !why, why.value_or(""));
  }
  if (!o.coloring.empty()) {
    const EdgeColoring c = coloring_from_json(read_json_file(o.coloring));
    std::string why;
    bool ok = false;
    try {
      ok = check_interval(g, c);
      if (!ok) {
        if (!check_proper(g, c)) {
          why = "not proper";
        } else if (auto bad = find_interval_violation(g, c)) {
          why = "gap at " + to_string(bad->vertex);
        }
      }
    } catch (const CheckError& e) {
      why = e.what();
    }
    line("interval coloring", ok, why);
  }
  if (!o.certificate.empty()) {
    const auto cert = certificate_from_json(read_json_file(o.certificate));
    line("full 3-regular subgraph", check_full_3regular(g, cert), "");
  }
  if (!o.oracle.empty()) {
    bool found = false;
    if (o.oracle == "factor") {
      const auto f = oracle_path_factor(g);
      found = f.has_value();
      if (f) std::cout << "oracle factor: " << factor_to_json(*f).dump() << '\n';
    } else if (o.oracle == "full3") {
      const auto c = oracle_full_3regular(g);
      found = c.has_value();
      if (c) std::cout << "oracle certificate: " << certificate_to_json(*c).dump() << '\n';
    } else if (o.oracle == "interval") {
      const auto c = oracle_interval_coloring(g, o.colors);
      found = c.has_value();
      if (c) std::cout << "oracle coloring: " << coloring_to_json(*c).dump() << '\n';
    } else {
      throw CLI::ValidationError("--oracle", "unknown oracle " + o.oracle);
    }
    std::cout << "oracle " << o.oracle << ": "
              << (found ? "found" : "none (definitive)") << '\n';
    all_ok = all_ok && found;
  }
  return all_ok ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// hunt

struct HuntOptions {
  HuntConfig config;
  std::string archive;
  std::string out;
};

int run_hunt_cmd(const HuntOptions& o) {
  const HuntReport report = run_hunt(o.config);
  Json j = hunt_report_to_json(report);
  if (!o.archive.empty()) {
    std::filesystem::create_directories(o.archive);
    for (const HuntRecord& r : report.archived)
      write_json_file(std::filesystem::path(o.archive) /
                          ("trial_" + std::to_string(r.trial) + ".json"),
                      graph_to_json(r.graph));
  }
  std::size_t counterexamples = 0;
  for (const HuntRecord& r : report.archived)
    counterexamples += r.oracle_confirmed ? 1 : 0;
  j["counterexamples"] = counterexamples;
  emit_json(o.out, j);
  if (counterexamples > 0) {
    std::cerr << "COUNTEREXAMPLE: " << counterexamples
              << " simple instance(s) without a proper path-factor archived\n";
    return kNegative;
  }
  return report.unknown > 0 ? kUnknown : kOk;
}

// ---------------------------------------------------------------------------
// export

struct ExportOptions {
  std::string in;
  std::string coloring;
  std::string out;
};

int run_export(const ExportOptions& o) {
  const BipartiteMultigraph g = load_graph(o.in);
  std::optional<EdgeColoring> c;
  if (!o.coloring.empty()) {
    c = coloring_from_json(read_json_file(o.coloring));
    if (c->colors.size() != g.edge_count())
      throw CheckError("coloring length does not match the edge count");
  }
  emit(o.out, to_dot(g, c ? &*c : nullptr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval 6-colorings of (3,4)-biregular bigraphs via path-factors"};
  app.require_subcommand(1);
  int code = kOk;

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Write a named or random graph as JSON");
  g->add_option("--family", gen.family,
                "subset6 | eight-triples | claw-triple | k34 | random | "
                "two-switch | no-mixed")
      ->required();
  g->add_option("--k", gen.k, "random: |X| = 4k, |Y| = 3k")->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.seed, "random: seed");
  g->add_flag("--simple", gen.simple, "random: reject multigraphs");
  g->add_option("--e1", gen.e1, "two-switch: edge of the first copy");
  g->add_option("--e2", gen.e2, "two-switch: edge of the second copy");
  g->add_option("--out", gen.out, "output file (default stdout)");
  g->add_option("--factor-out", gen.factor_out, "write the bundled factor here");
  g->callback([&] { code = run_gen(gen); });

  FactorOptions fac;
  auto* f = app.add_subcommand("factor", "Find a proper path-factor");
  f->add_option("--in", fac.in, "graph JSON")->required()->check(CLI::ExistingFile);
  f->add_option("--method", fac.method, "search | via24 | transversal | oracle")
      ->check(CLI::IsMember({"search", "via24", "transversal", "oracle"}));
  f->add_option("--max-nodes", fac.max_nodes, "search bound (0 = unbounded)");
  f->add_option("--lengths", fac.lengths, "search: allowed path lengths")
      ->check(CLI::IsMember({2, 4, 6, 8}));
  f->add_option("--perm", fac.perm, "transversal: color permutation 0..5")
      ->check(CLI::Range(0, 5));
  f->add_option("--out", fac.out, "write the factor JSON here");
  f->callback([&] { code = run_factor(fac); });

  ColorOptions col;
  auto* c = app.add_subcommand("color", "Interval 6-coloring from a factor");
  c->add_option("--in", col.in, "graph JSON")->required()->check(CLI::ExistingFile);
  c->add_option("--factor", col.factor, "factor JSON")->required()->check(CLI::ExistingFile);
  c->add_option("--out", col.out, "write the coloring JSON here");
  c->add_option("--dot", col.dot, "write a colored DOT drawing here");
  c->callback([&] { code = run_color(col); });

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Check certificates or run an oracle");
  v->add_option("--in", ver.in, "graph JSON")->required()->check(CLI::ExistingFile);
  v->add_option("--factor", ver.factor, "factor JSON")->check(CLI::ExistingFile);
  v->add_option("--coloring", ver.coloring, "coloring JSON")->check(CLI::ExistingFile);
  v->add_option("--certificate", ver.certificate, "full 3-regular edge set JSON")
      ->check(CLI::ExistingFile);
  v->add_option("--oracle", ver.oracle, "factor | full3 | interval")
      ->check(CLI::IsMember({"factor", "full3", "interval"}));
  v->add_option("--colors", ver.colors, "interval oracle: number of colors");
  v->callback([&] { code = run_verify(ver); });

  HuntOptions hunt;
  auto* h = app.add_subcommand("hunt", "Search random simple instances for a "
                                       "graph without a proper path-factor");
  h->add_option("--k", hunt.config.k, "|X| = 4k, |Y| = 3k")->check(CLI::PositiveNumber);
  h->add_option("--trials", hunt.config.trials, "number of instances");
  h->add_option("--seed", hunt.config.seed, "trial i uses seed + i");
  h->add_option("--jobs", hunt.config.jobs, "worker threads")->check(CLI::PositiveNumber);
  h->add_option("--max-nodes", hunt.config.search.max_nodes, "search bound per trial");
  h->add_option("--archive", hunt.archive, "directory for unresolved instances");
  h->add_option("--out", hunt.out, "report file (default stdout)");
  h->callback([&] { code = run_hunt_cmd(hunt); });

  ExportOptions ex;
  auto* e = app.add_subcommand("export", "Write a graph as DOT");
  e->add_option("--in", ex.in, "graph JSON")->required()->check(CLI::ExistingFile);
  e->add_option("--coloring", ex.coloring, "coloring JSON")->check(CLI::ExistingFile);
  e->add_option("--out", ex.out, "output file (default stdout)");
  e->callback([&] { code = run_export(ex); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kInputError;
  } catch (const InvariantError& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kInputError;
  } catch (const ivc::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  }
  return code;
}
