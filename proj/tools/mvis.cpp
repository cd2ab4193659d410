// mvis: mutual-visibility analysis of small graphs.
//
// JSON results go to stdout; human diagnostics go to stderr.
// Exit codes: 0 success/true, 1 semantic false/failure, 2 usage or parse
// error, 3 resource limit breached.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mv/bounds.hpp"
#include "mv/graph.hpp"
#include "mv/profile.hpp"
#include "mv/reproduce.hpp"
#include "mv/solver.hpp"
#include "mv/visibility.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

// Graph selector: petersen | hoffman-singleton | cycle:<n> | complete:<n>
// | file:<path>.
mv::Graph graph_from_spec(const std::string& spec) {
  if (spec == "petersen") return mv::build_petersen();
  if (spec == "hoffman-singleton") return mv::build_hoffman_singleton();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "cycle" || kind == "complete") {
      int n = 0;
      try {
        n = std::stoi(arg);
      } catch (const std::exception&) {
        throw mv::parse_error("bad vertex count `" + arg + "`");
      }
      return kind == "cycle" ? mv::build_cycle(n) : mv::build_complete(n);
    }
    if (kind == "file") {
      std::ifstream in(arg);
      if (!in) throw mv::io_error("cannot open " + arg);
      return mv::read_edge_list(in);
    }
  }
  throw mv::parse_error("unknown graph spec `" + spec +
                        "`; expected petersen, hoffman-singleton, cycle:<n>, "
                        "complete:<n> or file:<path>");
}

json profile_json(const mv::GraphProfile& p) {
  json j;
  j["n"] = p.n;
  j["connected"] = p.connected;
  j["regular"] = p.is_regular;
  j["degree"] = p.degree;
  j["diameter"] = p.diameter ? json(*p.diameter) : json(nullptr);
  j["girth"] = p.girth ? json(*p.girth) : json(nullptr);
  j["triangle_free"] = p.triangle_free;
  j["srg"] = p.srg ? json({p.srg->n, p.srg->d, p.srg->lambda, p.srg->mu})
                   : json(nullptr);
  j["unique_common_neighbour"] = p.unique_common_neighbour;
  j["lemma4_class"] = p.lemma4_class;
  j["moore_diam2"] = p.is_moore_diam2;
  return j;
}

json analysis_json(const mv::SetAnalysis& a) {
  json j;
  j["s"] = a.s;
  j["e_S"] = a.edges_inside;
  j["e_S_T"] = a.edges_crossing;
  json hist = json::object();
  for (auto [k, cnt] : a.k_histogram) hist[std::to_string(k)] = cnt;
  j["k_histogram"] = hist;
  j["induced_max_degree"] = a.induced_max_degree;
  json edges = json::array();
  for (auto [u, v] : a.matching_edges) edges.push_back({u, v});
  j["matching_edges"] = edges;
  j["isolated_count"] = a.isolated_count;
  return j;
}

json certificate_json(mv::Bits mask) {
  json arr = json::array();
  mv::for_each_bit(mask, [&](int v) { arr.push_back(v); });
  return arr;
}

json solve_json(const std::string& problem, const std::string& spec,
                const mv::SolveResult& r) {
  json j;
  j["problem"] = problem;
  j["graph"] = spec;
  j["optimum"] = r.optimum;
  j["certificate"] = certificate_json(r.certificate.mask);
  if (!r.certificate_edges.empty()) {
    json edges = json::array();
    for (auto [u, v] : r.certificate_edges) edges.push_back({u, v});
    j["certificate_edges"] = edges;
  }
  j["nodes"] = r.nodes_explored;
  j["ms"] = r.elapsed_ms;
  j["method"] = r.method == mv::SolveMethod::branch_and_bound
                    ? "branch-and-bound"
                    : "exhaustive";
  j["proven"] = r.proven;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_verify(const std::string& only) {
  auto rows = mv::reproduction_checks(only);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.id.size());
  bool all_pass = true;
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    std::cout << (row.pass ? "PASS  " : "FAIL  ") << std::left
              << std::setw(static_cast<int>(width) + 2) << row.id
              << "expected: " << row.expected << "\n";
    if (!row.pass)
      std::cout << "      " << std::setw(static_cast<int>(width) + 2) << ""
                << "got:      " << row.got << "\n";
    std::cout << "      " << std::setw(static_cast<int>(width) + 2) << ""
              << "elapsed:  " << std::fixed << std::setprecision(1) << row.ms
              << " ms\n";
  }
  std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return all_pass ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mutual-visibility analysis of small graphs"};
  app.require_subcommand(1);

  std::string graph_spec;
  std::string set_text;
  std::string out_path;
  std::string only;
  bool force = false;
  bool canonical = false;
  int count_k = -1;
  double limit_ms = 0.0;
  std::uint64_t node_limit = 0;

  auto add_graph_flag = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_spec,
                    "petersen | hoffman-singleton | cycle:<n> | complete:<n> "
                    "| file:<path>")
        ->required();
  };

  auto* cmd_profile = app.add_subcommand("profile", "structural invariants");
  add_graph_flag(cmd_profile);

  auto* cmd_check =
      app.add_subcommand("check", "test a vertex set for mutual visibility");
  add_graph_flag(cmd_check);
  cmd_check->add_option("--set", set_text,
                        "comma-separated 0-based vertex indices");

  auto* cmd_poly = app.add_subcommand("polynomial", "visibility polynomial");
  add_graph_flag(cmd_poly);
  cmd_poly->add_flag("--force", force, "override the 30-vertex size guard");

  auto* cmd_mu = app.add_subcommand("mu", "mutual-visibility number");
  add_graph_flag(cmd_mu);
  cmd_mu->add_flag("--canonical", canonical,
                   "return the lexicographically smallest optimum set");
  cmd_mu->add_option("--limit-ms", limit_ms, "time limit in milliseconds");
  cmd_mu->add_option("--node-limit", node_limit, "search node limit");

  auto* cmd_match =
      app.add_subcommand("induced-matching", "maximum induced matching");
  add_graph_flag(cmd_match);
  cmd_match->add_option("--count", count_k,
                        "count induced k-matchings instead of maximizing");
  cmd_match->add_flag("--canonical", canonical,
                      "return the lexicographically smallest optimum");
  cmd_match->add_option("--limit-ms", limit_ms, "time limit in milliseconds");

  auto* cmd_bounds =
      app.add_subcommand("bounds", "closed-form upper bounds with hypotheses");
  add_graph_flag(cmd_bounds);

  auto* cmd_export = app.add_subcommand("export-lp", "write the 0-1 model");
  add_graph_flag(cmd_export);
  cmd_export->add_option("--out", out_path, "output path (default stdout)");

  auto* cmd_verify =
      app.add_subcommand("verify-paper", "run the built-in result suite");
  cmd_verify->add_option("--only", only, "filter rows by id substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (cmd_verify->parsed()) return run_verify(only);

    mv::SolveOptions opts;
    opts.canonical = canonical;
    opts.time_limit_ms = limit_ms;
    opts.node_limit = node_limit;

    if (cmd_profile->parsed()) {
      emit(profile_json(mv::profile(graph_from_spec(graph_spec))));
      return kExitTrue;
    }

    if (cmd_check->parsed()) {
      mv::Graph g = graph_from_spec(graph_spec);
      mv::VertexSet s = mv::VertexSet::parse(set_text, g.size());
      auto p = mv::profile(g);
      mv::CheckerKind kind = mv::select_checker(p);
      if (kind == mv::CheckerKind::general && !p.connected)
        throw mv::precondition_error("graph is disconnected");
      bool is_mv = mv::detail::mv_check(g, s.mask, kind);
      json j;
      j["set"] = s.to_string();
      j["is_mv"] = is_mv;
      j["checker"] = mv::checker_name(kind);
      j["analysis"] = analysis_json(mv::analyze_set(g, s));
      emit(j);
      return is_mv ? kExitTrue : kExitFalse;
    }

    if (cmd_poly->parsed()) {
      mv::Graph g = graph_from_spec(graph_spec);
      auto poly = mv::visibility_polynomial(g, force);
      json j;
      j["graph"] = graph_spec;
      j["coefficients"] = poly.coefficients;
      j["polynomial"] = poly.to_string();
      j["mu"] = poly.degree();
      emit(j);
      return kExitTrue;
    }

    if (cmd_mu->parsed()) {
      mv::Graph g = graph_from_spec(graph_spec);
      mv::SolveResult r = mv::mu_exact(g, opts);
      emit(solve_json("mu", graph_spec, r));
      return r.proven ? kExitTrue : kExitLimit;
    }

    if (cmd_match->parsed()) {
      mv::Graph g = graph_from_spec(graph_spec);
      if (count_k >= 0) {
        json j;
        j["problem"] = "count-induced-matchings";
        j["graph"] = graph_spec;
        j["k"] = count_k;
        j["count"] = mv::count_induced_k_matchings(g, count_k);
        emit(j);
        return kExitTrue;
      }
      mv::SolveResult r = mv::max_induced_matching(g, opts);
      emit(solve_json("induced-matching", graph_spec, r));
      return r.proven ? kExitTrue : kExitLimit;
    }

    if (cmd_bounds->parsed()) {
      mv::BoundReport r = mv::bound_report(graph_from_spec(graph_spec));
      auto entry = [](const mv::BoundEntry& e) {
        json j;
        j["value"] = e.value ? json(*e.value) : json(nullptr);
        j["applicable"] = e.applicable;
        j["reason"] = e.reason;
        return j;
      };
      json j;
      j["graph"] = graph_spec;
      j["prop1"] = entry(r.prop1);
      j["lemma6"] = entry(r.lemma6);
      j["degree_count"] = entry(r.degree_count);
      j["jensen"] = entry(r.jensen);
      j["moore_n"] = r.moore_n ? json(*r.moore_n) : json(nullptr);
      emit(j);
      return kExitTrue;
    }

    if (cmd_export->parsed()) {
      mv::IpModel m = mv::build_ip_model(graph_from_spec(graph_spec));
      if (out_path.empty()) {
        mv::export_lp(m, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw mv::io_error("cannot open " + out_path);
        mv::export_lp(m, out);
      }
      return kExitTrue;
    }
  } catch (const mv::guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
