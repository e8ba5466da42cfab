#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bcc/biclique.hpp"
#include "bcc/chordal.hpp"
#include "bcc/error.hpp"
#include "bcc/gen.hpp"
#include "bcc/graph_io.hpp"
#include "bcc/serialize.hpp"
#include "bcc/tree_rank.hpp"

namespace bcc::cli {

using nlohmann::json;

OracleBudget parse_budget(const std::string& spec, OracleBudget base) {
  std::istringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("budget entry '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    std::string text = item.substr(eq + 1);
    long value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0)
      throw InputError("budget value for '" + key + "' must be positive");
    if (key == "cover") base.cover_vertex_cap = static_cast<int>(value);
    else if (key == "vertices") base.vertex_cap = static_cast<int>(value);
    else if (key == "clique") base.clique_vertex_cap = static_cast<int>(value);
    else if (key == "tree") base.tree_edge_cap = static_cast<int>(value);
    else if (key == "time_ms") base.time_limit = std::chrono::milliseconds(value);
    else throw InputError("unknown budget key '" + key + "'");
  }
  return base;
}

namespace {

json optional_value(const BoundValue& b) {
  return b.value ? json(*b.value) : json(nullptr);
}

json window_json(const OracleWindow& w) { return json::array({w.lower, w.upper}); }

json cover_json(const CoverResult& c) {
  return {{"size", c.cover.size()},
          {"bicliques", to_json(c.cover)},
          {"ranking_r", c.ranks},
          {"ranking_optimal", c.ranking_optimal},
          {"all_leq2_flag", c.all_at_most_two},
          {"reshaped", c.reshaped},
          {"maximal_cliques", c.maximal_cliques},
          {"level_sizes_before", c.level_sizes_before},
          {"level_sizes_after", c.level_sizes_after}};
}

}  // namespace

json report_json(const BoundReport& r) {
  json bounds = {
      {"log_mc", optional_value(r.lb_log_mc)},
      {"log_chi", optional_value(r.lb_log_chi)},
      {"log_chi_certified", r.lb_log_chi.certified},
      {"omega_conflict", optional_value(r.lb_omega_conflict)},
      {"omega_conflict_certified", r.lb_omega_conflict.certified},
      {"omega_conflict_induced", optional_value(r.omega_conflict_induced)},
      {"matching_num", r.lb_matching ? r.lb_matching->num : 0},
      {"matching_den", r.lb_matching ? r.lb_matching->den : 1},
      {"matching_ceil", optional_value(r.lb_matching_ceil)},
      {"mc_complement", optional_value(r.mc_complement)},
      {"ub_mc_minus_one", optional_value(r.ub_mc_minus_one)},
      {"ub_edge_ranking", optional_value(r.ub_edge_ranking)},
      {"ub_edge_ranking_certified", r.ub_edge_ranking.certified},
      {"bp_upper", r.bp_window ? json(r.bp_window->bp_upper) : json(nullptr)},
      {"bc_lower_from_bp",
       r.bp_window && r.bp_window->bc_lower_from_bp
           ? json(*r.bp_window->bc_lower_from_bp)
           : json(nullptr)},
  };
  json provenance = json::object();
  json notes = json::object();
  for (auto [name, b] :
       {std::pair{"log_mc", &r.lb_log_mc}, {"log_chi", &r.lb_log_chi},
        {"omega_conflict", &r.lb_omega_conflict},
        {"omega_conflict_induced", &r.omega_conflict_induced},
        {"ub_mc_minus_one", &r.ub_mc_minus_one}, {"ub_cover", &r.ub_cover},
        {"ub_edge_ranking", &r.ub_edge_ranking}}) {
    if (b->value) provenance[name] = to_string(b->provenance);
    if (!b->note.empty()) notes[name] = b->note;
  }

  json oracle = {{"bc", nullptr}, {"bp", nullptr}, {"exact", false}};
  bool exact = r.exact_bc.has_value();
  if (r.exact_bc) {
    oracle["bc_window"] = window_json(r.exact_bc->window);
    if (r.exact_bc->window.exact()) oracle["bc"] = r.exact_bc->window.lower;
    exact = exact && r.exact_bc->window.exact();
  }
  if (r.exact_bp) {
    oracle["bp_window"] = window_json(r.exact_bp->window);
    if (r.exact_bp->window.exact()) oracle["bp"] = r.exact_bp->window.lower;
    exact = exact && r.exact_bp->window.exact();
  }
  oracle["exact"] = exact;

  return {{"n", r.n},
          {"m", r.m},
          {"complement_chordal", r.complement_chordal},
          {"bounds", bounds},
          {"cover", r.cover ? cover_json(*r.cover) : json(nullptr)},
          {"oracle", oracle},
          {"bc_pinned", r.bc_pinned},
          {"provenance", provenance},
          {"notes", notes},
          {"consistent", r.consistent},
          {"violations", r.violations}};
}

namespace {

// Thrown by handlers to finish with a specific code after printing.
struct Exit {
  int code;
  std::string message;
};

OracleBudget effective_budget(const std::string& flag) {
  OracleBudget b;
  if (const char* env = std::getenv("BCC_BUDGET")) b = parse_budget(env, b);
  if (!flag.empty()) b = parse_budget(flag, b);
  return b;
}

RankingMode parse_ranking(const std::string& s) {
  if (s == "exact") return RankingMode::exact;
  if (s == "heuristic") return RankingMode::heuristic;
  return RankingMode::automatic;
}

// Writes to -o when given, to `out` otherwise.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Exit{ExitCode::parse_failure, "cannot write '" + path + "'"};
  f << text;
}

std::string text_value(const BoundValue& b) {
  return b.value ? std::to_string(*b.value) : "-";
}

std::string text_report(const BoundReport& r) {
  std::ostringstream ss;
  auto row = [&](const std::string& name, const BoundValue& b) {
    ss << std::left << std::setw(24) << name << std::setw(8) << text_value(b);
    if (b.value)
      ss << std::setw(12) << to_string(b.provenance)
         << (b.certified ? "certified" : "uncertified");
    if (!b.note.empty()) ss << "  (" << b.note << ")";
    ss << '\n';
  };
  ss << "n " << r.n << "  m " << r.m << "  complement chordal "
     << (r.complement_chordal ? "yes" : "no") << '\n';
  row("mc(complement)", r.mc_complement);
  row("lb_log_mc", r.lb_log_mc);
  row("lb_log_chi", r.lb_log_chi);
  row("lb_omega_conflict", r.lb_omega_conflict);
  row("omega_conflict_induced", r.omega_conflict_induced);
  if (r.lb_matching)
    ss << std::left << std::setw(24) << "lb_matching"
       << std::to_string(r.lb_matching->num) + "/" +
              std::to_string(r.lb_matching->den)
       << "  ceil " << r.lb_matching->ceil() << '\n';
  row("ub_mc_minus_one", r.ub_mc_minus_one);
  row("ub_cover", r.ub_cover);
  row("ub_edge_ranking", r.ub_edge_ranking);
  if (r.bp_window) {
    ss << std::left << std::setw(24) << "bp_upper" << r.bp_window->bp_upper
       << '\n';
    if (r.bp_window->bc_lower_from_bp)
      ss << std::left << std::setw(24) << "bc_lower_from_bp"
         << *r.bp_window->bc_lower_from_bp << '\n';
  }
  auto oracle_row = [&](const char* name,
                        const std::optional<CoverCertificate>& c) {
    ss << std::left << std::setw(24) << name;
    if (!c)
      ss << "-  (not run)";
    else if (c->window.exact())
      ss << c->window.lower;
    else
      ss << "[" << c->window.lower << ", " << c->window.upper << "]";
    ss << '\n';
  };
  oracle_row("exact_bc", r.exact_bc);
  oracle_row("exact_bp", r.exact_bp);
  ss << "bc pinned without oracle: " << (r.bc_pinned ? "yes" : "no") << '\n';
  ss << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
  for (const auto& v : r.violations) ss << "violation: " << v << '\n';
  return ss.str();
}

int cmd_bounds(const std::string& input, const std::string& dir, bool as_json,
               const std::string& output, const ReportOptions& opts,
               std::ostream& out) {
  if (!dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".graph")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<std::future<std::pair<int, json>>> jobs;
    for (const auto& f : files)
      jobs.push_back(std::async(std::launch::async, [f, &opts] {
        try {
          BoundReport r = full_report(read_graph_file(f.string()).graph, opts);
          json j = report_json(r);
          j["file"] = f.filename().string();
          return std::pair{r.consistent ? 0 : 2, j};
        } catch (const std::exception& e) {
          return std::pair{1, json{{"file", f.filename().string()},
                                   {"error", e.what()}}};
        }
      }));
    int code = ExitCode::ok;
    std::string text;
    for (auto& job : jobs) {
      auto [c, j] = job.get();
      text += j.dump() + "\n";
      if (c == ExitCode::inconsistency) code = c;
      else if (c != 0 && code == ExitCode::ok) code = c;
    }
    emit(output, out, text);
    return code;
  }
  if (input.empty())
    throw Exit{ExitCode::parse_failure, "bounds needs an input file or --dir"};
  BoundReport r = full_report(read_graph_file(input).graph, opts);
  emit(output, out, as_json ? report_json(r).dump(2) + "\n" : text_report(r));
  return r.consistent ? ExitCode::ok : ExitCode::inconsistency;
}

Graph complement_checked(const Graph& g) {
  Graph c = complement(g);
  if (!is_chordal(c)) {
    try {
      clique_tree(c);
    } catch (const NotChordalError& e) {
      throw Exit{ExitCode::precondition,
                 std::string("complement is not chordal: ") + e.what()};
    }
  }
  return c;
}

int cmd_cover(const std::string& input, const std::string& policy,
              const std::string& ranking, bool partition, bool reshape,
              const std::string& format, const std::string& output,
              std::ostream& out) {
  const Graph g = read_graph_file(input).graph;
  const Graph comp = complement_checked(g);
  std::vector<std::string> comments;
  json meta;
  BicliqueList cover;
  if (partition) {
    cover = find_partition(
        clique_tree(comp),
        policy == "first" ? SplitPolicy::first : SplitPolicy::balanced);
    comments.push_back("partition size " + std::to_string(cover.size()));
    meta = {{"size", cover.size()}, {"bicliques", to_json(cover)},
            {"policy", policy}};
  } else {
    CoverOptions opts;
    opts.ranking = parse_ranking(ranking);
    opts.reshape_tree = reshape;
    CoverResult res = cover_cochordal(g, opts);
    cover = res.cover;
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
      return s;
    };
    comments = {
        "cover size " + std::to_string(cover.size()),
        "ranks " + std::to_string(res.ranks) + " optimal " +
            (res.ranking_optimal ? "yes" : "no"),
        std::string("all_leq2 ") + (res.all_at_most_two ? "yes" : "no"),
        "levels before " + join(res.level_sizes_before),
        "levels after " + join(res.level_sizes_after),
    };
    meta = cover_json(res);
  }
  CoverDiagnostic diag = check_cover(g, cover, partition);
  if (!diag.ok)
    throw Exit{ExitCode::inconsistency, "produced cover fails verification: " +
                                            diag.message};
  if (format == "json") {
    json j = {{"n", g.order()}, {"m", g.size()}, {"cover", meta}};
    emit(output, out, j.dump(2) + "\n");
  } else {
    std::ostringstream ss;
    write_cover(ss, cover, comments);
    emit(output, out, ss.str());
  }
  return ExitCode::ok;
}

BicliqueList load_cover(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("cover JSON: ") + e.what());
    }
    if (j.is_object()) {
      if (j.contains("cover")) j = j["cover"];
      if (j.is_object() && j.contains("bicliques")) j = j["bicliques"];
    }
    return cover_from_json(j);
  }
  std::istringstream ss(text);
  return read_cover(ss);
}

int cmd_verify(const std::string& graph, const std::string& cover_path,
               const std::string& mode, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(graph).graph;
  const BicliqueList cover = load_cover(cover_path);
  CoverDiagnostic diag = check_cover(g, cover, mode == "partition");
  if (diag.ok) {
    out << "valid " << mode << " of size " << cover.size() << '\n';
    return ExitCode::ok;
  }
  err << "invalid " << mode << ": " << diag.message << '\n';
  return ExitCode::inconsistency;
}

void write_instance(const NamedInstance& inst, const json& params,
                    const std::string& output, std::ostream& out) {
  std::string text = graph_to_string(inst.graph, {inst.name});
  emit(output, out, text);
  if (output.empty()) return;
  auto opt = [](const std::optional<long>& v) {
    return v ? json(*v) : json(nullptr);
  };
  json side = {{"name", inst.name},
               {"n", inst.graph.order()},
               {"m", inst.graph.size()},
               {"labels", inst.labels},
               {"params", params},
               {"expected",
                {{"bc", opt(inst.expected.bc)},
                 {"mc_complement", opt(inst.expected.mc_complement)},
                 {"source", inst.expected.source}}}};
  emit(output + ".json", out, side.dump(2) + "\n");
}

Tree shape_tree(const std::string& shape, int nodes, int legs,
                std::uint64_t seed) {
  if (shape == "path") return path_tree(nodes);
  if (shape == "star") return star_tree(nodes - 1);
  if (shape == "caterpillar") return caterpillar_tree(nodes, legs);
  if (shape == "random") return random_tree(nodes, seed);
  throw InputError("unknown tree shape '" + shape + "'");
}

int cmd_rank(const std::string& tree_path, const std::string& ranking,
             const std::string& output, std::ostream& out) {
  Tree t = read_tree_file(tree_path);
  RankingResult res = rank_tree(t, parse_ranking(ranking));
  std::ostringstream ss;
  ss << "r: " << res.ranks << '\n'
     << "optimal: " << (res.optimal ? "yes" : "no") << '\n';
  write_ranking(ss, t, res.ranking);
  emit(output, out, ss.str());
  return ExitCode::ok;
}

int cmd_oracle(const std::string& kind, const std::string& input, bool conflict,
               const std::string& rule, const std::string& format,
               const std::string& output, const OracleBudget& budget,
               std::ostream& out) {
  Graph g = read_graph_file(input).graph;
  if (conflict)
    g = conflict_graph(g, rule == "induced" ? ConflictRule::induced_four_cycle
                                            : ConflictRule::any_four_cycle);
  json j = {{"kind", kind}};
  std::ostringstream ss;
  OracleWindow window;
  bool windowed = true;
  if (kind == "bc" || kind == "bp") {
    CoverCertificate c = kind == "bc" ? exact_bc(g, budget) : exact_bp(g, budget);
    window = c.window;
    j["certificate"] = to_json(c.certificate);
    ss << kind << ": ";
    if (window.exact()) ss << window.lower << '\n';
    else ss << "[" << window.lower << ", " << window.upper << "]\n";
    write_cover(ss, c.certificate);
  } else if (kind == "chi" || kind == "omega" || kind == "matching") {
    window = kind == "chi"     ? exact_chromatic(g, budget)
             : kind == "omega" ? exact_clique_number(g, budget)
                               : exact_max_matching(g, budget);
    ss << kind << ": ";
    if (window.exact()) ss << window.lower << '\n';
    else ss << "[" << window.lower << ", " << window.upper << "]\n";
  } else if (kind == "cliques") {
    windowed = false;
    auto cliques = enumerate_maximal_cliques(g, budget);
    j["cliques"] = cliques;
    j["count"] = cliques.size();
    ss << "cliques: " << cliques.size() << '\n';
    for (const auto& c : cliques) {
      for (std::size_t i = 0; i < c.size(); ++i) ss << (i ? " " : "") << c[i];
      ss << '\n';
    }
  } else {
    throw Exit{ExitCode::parse_failure, "unknown oracle '" + kind + "'"};
  }
  if (windowed) {
    j["window"] = window_json(window);
    j["exact"] = window.exact();
    j["value"] = window.exact() ? json(window.lower) : json(nullptr);
  }
  emit(output, out, format == "json" ? j.dump(2) + "\n" : ss.str());
  return windowed && !window.exact() ? ExitCode::budget : ExitCode::ok;
}

int cmd_tree(const std::string& input, bool use_complement,
             const std::string& format, const std::string& output,
             std::ostream& out) {
  Graph g = read_graph_file(input).graph;
  if (use_complement) g = complement(g);
  CliqueTree t;
  try {
    t = clique_tree(g);
  } catch (const NotChordalError& e) {
    throw Exit{ExitCode::precondition, e.what()};
  }
  if (format == "json") {
    emit(output, out, to_json(t).dump(2) + "\n");
  } else {
    std::ostringstream ss;
    write_clique_tree(ss, t);
    emit(output, out, ss.str());
  }
  return ExitCode::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Biclique covers and bounds for small and co-chordal graphs",
               "bcc"};
  app.require_subcommand(1);
  std::string budget_flag, output, format = "text";
  app.add_option("--budget", budget_flag,
                 "oracle caps, e.g. cover=14,vertices=20,time_ms=10000");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound report for a graph");
  std::string input, dir;
  bool as_json = false, no_oracle = false;
  bounds->add_option("input", input, "edge-list file");
  bounds->add_option("--dir", dir, "analyse every *.graph file (JSONL)");
  bounds->add_flag("--json", as_json, "JSON instead of text");
  bounds->add_flag("--no-oracle", no_oracle, "skip the exact oracles");
  bounds->add_option("-o,--output", output);

  // cover
  auto* cover = app.add_subcommand("cover", "cover a co-chordal graph");
  std::string policy = "balanced", ranking = "auto";
  bool partition = false, no_reshape = false;
  cover->add_option("input", input)->required();
  cover->add_option("--policy", policy)
      ->check(CLI::IsMember({"balanced", "first"}));
  cover->add_option("--ranking", ranking)
      ->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  cover->add_flag("--partition", partition, "emit the edge-cut partition");
  cover->add_flag("--no-reshape", no_reshape, "keep the clique tree as built");
  cover->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cover->add_option("-o,--output", output);

  // verify
  auto* verify = app.add_subcommand("verify", "check a cover file");
  std::string cover_path, mode = "cover";
  verify->add_option("graph", input)->required();
  verify->add_option("cover", cover_path)->required();
  verify->add_option("--mode", mode)
      ->check(CLI::IsMember({"cover", "partition"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", output);
  int n = 0, m = 0, k = 0, nodes = 0, legs = 1, own = 1, middle = 1;
  double density = 0.3;
  std::uint64_t seed = 0;
  std::string fig_id, shape = "path";
  auto* g_copath = gen->add_subcommand("copath", "complement of a path");
  g_copath->add_option("--n", n)->required();
  auto* g_wind = gen->add_subcommand("cowindmill", "complement of a windmill");
  g_wind->add_option("--m", m)->required();
  g_wind->add_option("--k", k)->required();
  auto* g_fig = gen->add_subcommand("fig", "figure instance");
  g_fig->add_option("--id", fig_id)->required();
  auto* g_chordal = gen->add_subcommand("chordal", "random chordal graph");
  g_chordal->add_option("--n", n)->required();
  g_chordal->add_option("--density", density);
  g_chordal->add_option("--seed", seed)->required();
  auto* g_two = gen->add_subcommand("twomember",
                                    "co-chordal, every vertex in <= 2 cliques");
  g_two->add_option("--shape", shape)
      ->check(CLI::IsMember({"path", "star", "caterpillar", "random"}));
  g_two->add_option("--nodes", nodes)->required();
  g_two->add_option("--legs", legs);
  g_two->add_option("--private", own, "private vertices per clique");
  g_two->add_option("--middle", middle, "vertices per middle set");
  g_two->add_option("--seed", seed)->required();
  for (auto* sub : {g_copath, g_wind, g_fig, g_chordal, g_two})
    sub->add_option("-o,--output", output);

  // rank
  auto* rank = app.add_subcommand("rank", "edge-rank a tree");
  std::string tree_path;
  rank->add_option("--tree", tree_path)->required();
  rank->add_option("--ranking", ranking)
      ->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  rank->add_option("-o,--output", output);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact brute-force values");
  std::string kind, rule = "any";
  bool conflict = false;
  oracle->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"bc", "bp", "chi", "omega", "matching", "cliques"}));
  oracle->add_option("input", input)->required();
  oracle->add_flag("--conflict", conflict, "run on the edge conflict graph");
  oracle->add_option("--rule", rule)->check(CLI::IsMember({"any", "induced"}));
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  oracle->add_option("-o,--output", output);

  // tree
  auto* tree = app.add_subcommand("tree", "clique tree of a chordal graph");
  bool use_complement = false;
  tree->add_option("input", input)->required();
  tree->add_flag("--complement", use_complement, "use the complement");
  tree->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  tree->add_option("-o,--output", output);

  for (auto* sub : {bounds, cover, verify, gen, rank, oracle, tree})
    sub->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::parse_failure;
  }

  try {
    const OracleBudget budget = effective_budget(budget_flag);
    if (*bounds) {
      ReportOptions opts;
      opts.budget = budget;
      opts.run_oracles = !no_oracle;
      return cmd_bounds(input, dir, as_json, output, opts, out);
    }
    if (*cover)
      return cmd_cover(input, policy, ranking, partition, !no_reshape, format,
                       output, out);
    if (*verify) return cmd_verify(input, cover_path, mode, out, err);
    if (*gen) {
      if (*g_copath) write_instance(gen_copath(n), {{"n", n}}, output, out);
      if (*g_wind)
        write_instance(gen_cowindmill(m, k), {{"m", m}, {"k", k}}, output, out);
      if (*g_fig) write_instance(gen_fig_graph(fig_id), {{"id", fig_id}}, output, out);
      if (*g_chordal) {
        Graph g = gen_random_chordal(n, density, seed);
        NamedInstance inst{"chordal_" + std::to_string(n) + "_" +
                               std::to_string(seed),
                           g, default_labels(n), {}};
        inst.expected.source = "random chordal";
        write_instance(inst, {{"n", n}, {"density", density}, {"seed", seed}},
                       output, out);
      }
      if (*g_two) {
        Tree t = shape_tree(shape, nodes, legs, seed);
        std::vector<int> sizes(t.node_count());
        for (int i = 0; i < t.node_count(); ++i) {
          const int degree = static_cast<int>(t.incident(i).size());
          sizes[i] = (degree <= 1 ? std::max(own, 1) : own) + middle * degree;
        }
        write_instance(
            gen_two_membership_cochordal(
                t, sizes, std::vector<int>(t.edge_count(), middle), seed),
            {{"shape", shape}, {"nodes", nodes}, {"legs", legs},
             {"private", own}, {"middle", middle}, {"seed", seed}},
            output, out);
      }
      return ExitCode::ok;
    }
    if (*rank) return cmd_rank(tree_path, ranking, output, out);
    if (*oracle)
      return cmd_oracle(kind, input, conflict, rule, format, output, budget,
                        out);
    if (*tree) return cmd_tree(input, use_complement, format, output, out);
  } catch (const Exit& e) {
    err << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return ExitCode::parse_failure;
  } catch (const InputError& e) {
    err << "bad input: " << e.what() << '\n';
    return ExitCode::parse_failure;
  } catch (const DomainError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return ExitCode::precondition;
  } catch (const SizeError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return ExitCode::budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::inconsistency;
  }
  return ExitCode::parse_failure;
}

}  // namespace bcc::cli
