// Command-line front end: lattice, angles, classify, verify, bounds, abstract.
//
// Exit codes: 0 pass, 1 theorem failure, 2 input error, 3 cap exceeded.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intangle/bounds.hpp"
#include "intangle/census.hpp"
#include "intangle/corpus.hpp"
#include "intangle/errors.hpp"
#include "intangle/io.hpp"
#include "intangle/lattice.hpp"
#include "intangle/pp_basis.hpp"
#include "intangle/quadruple.hpp"
#include "intangle/verify.hpp"

namespace fs = std::filesystem;
using namespace intangle;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitTheorem = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  std::string family;
  int n = 0;
  int p = 0;
  int k = 0;
  std::string group_spec;
  std::string table;
  std::vector<std::string> perms;
  std::size_t degree = 0;
  bool unchecked = false;
  std::string base;
  std::vector<std::string> pair;
  std::string pairs = "all";
  std::vector<std::string> suites{"all"};
  std::string out;
  std::string format = "text";
  std::size_t max_order = GroupLimits{}.max_order;
  std::size_t max_nodes = GroupLimits{}.max_nodes;
  std::string cache_dir;
  bool quick = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t reps = VerifyOptions{}.random_reps;
  std::string index;
  std::size_t double_cosets = 0;
  std::string trace_file;

  GroupLimits limits() const { return {max_order, max_nodes}; }
  bool has_group_source() const {
    return !family.empty() || !group_spec.empty() || !table.empty() || !perms.empty();
  }
};

[[noreturn]] void input_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

/// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

GroupPtr load_group(const RunConfig& cfg, bool unchecked) {
  const int sources = int(!cfg.family.empty()) + int(!cfg.group_spec.empty()) + int(!cfg.table.empty()) +
                      int(!cfg.perms.empty());
  if (sources != 1) input_error("exactly one group source is required (--family, --group, --table or --perms)");
  if (cfg.max_order == 0 || cfg.max_nodes == 0) input_error("caps must be positive");
  const auto limits = cfg.limits();
  if (!cfg.family.empty()) {
    std::vector<int> params;
    if (cfg.family == "elementary_abelian") {
      params = {cfg.p, cfg.k};
    } else {
      params = {cfg.n};
    }
    return named_group(cfg.family, params, limits);
  }
  if (!cfg.group_spec.empty()) return parse_group_spec(cfg.group_spec, limits);
  if (!cfg.table.empty()) {
    const auto text = read_text_file(cfg.table);
    return group_from_json(parse_json_text(text, cfg.table), limits, unchecked);
  }
  if (cfg.degree == 0) input_error("--perms needs --degree");
  return group_from_permutations(cfg.perms, cfg.degree, limits);
}

Element resolve_element(const FiniteGroup& g, const std::string& token) {
  if (token.empty()) input_error("empty element token");
  if (std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const auto v = std::stoull(token);
    if (v >= g.order()) input_error("element index " + token + " out of range 0.." + std::to_string(g.order() - 1));
    return static_cast<Element>(v);
  }
  if (auto e = g.find_label(token)) return *e;
  if (!g.permutations().empty() && token.front() == '(') {
    const auto images = parse_cycles(token, g.permutations().front().size());
    for (Element x = 0; x < g.order(); ++x) {
      if (g.permutations()[x] == images) return x;
    }
    input_error("permutation " + token + " is not in the group");
  }
  input_error("unknown element \"" + token + "\"");
}

/// "trivial", "whole" or a comma-separated generator list, joined with `base`.
Subgroup parse_subgroup(const GroupPtr& g, const std::string& text, const std::optional<Subgroup>& base) {
  const auto t = trim(text);
  if (t == "whole") return Subgroup::whole(g);
  std::vector<Element> gens;
  if (base) gens = base->elements();
  if (!t.empty() && t != "trivial") {
    for (const auto& tok : split_top(t, ',')) gens.push_back(resolve_element(*g, tok));
  }
  return closure(g, gens);
}

SubgroupLattice lattice_for(const RunConfig& cfg, const Subgroup& base) {
  if (!cfg.cache_dir.empty()) {
    if (auto cached = load_lattice_cache(cfg.cache_dir, base)) return std::move(*cached);
  }
  auto lat = enumerate_subgroups(base, cfg.limits());
  if (!cfg.cache_dir.empty()) {
    try {
      store_lattice_cache(cfg.cache_dir, lat);
    } catch (const std::exception&) {
      // An unwritable cache only costs a recomputation next time.
    }
  }
  return lat;
}

void emit(const RunConfig& cfg, const std::string& file, const std::string& text) {
  if (!cfg.out.empty()) write_text_file(fs::path(cfg.out) / file, text);
}

std::vector<PairSpec> select_pairs(const RunConfig& cfg, const SubgroupLattice& lat) {
  std::vector<PairSpec> out;
  if (!cfg.pair.empty() || cfg.pairs == "explicit") {
    if (cfg.pair.empty()) input_error("--pairs explicit needs at least one --pair \"A;B\"");
    for (const auto& spec : cfg.pair) {
      auto parts = split_top(spec, ';');
      if (parts.size() == 1) parts = split_top(spec, ':');
      if (parts.size() != 2) input_error("--pair expects \"A;B\" or \"A:B\", got \"" + spec + "\"");
      const auto p = parse_subgroup(lat.group, parts[0], lat.base());
      const auto q = parse_subgroup(lat.group, parts[1], lat.base());
      const auto ip = lat.find(p.members());
      const auto iq = lat.find(q.members());
      if (!ip || !iq) input_error("pair \"" + spec + "\" is not in the lattice");
      out.push_back({*ip, *iq});
    }
    return out;
  }
  std::vector<std::size_t> rows;
  if (cfg.pairs == "all") {
    rows = lat.proper_nodes();
  } else if (cfg.pairs == "minimal") {
    rows = lat.atoms;
  } else {
    input_error("--pairs must be all, minimal or explicit");
  }
  for (auto a : rows) {
    for (auto b : rows) out.push_back({a, b});
  }
  return out;
}

struct Loaded {
  GroupPtr group;
  Subgroup base;
};

Loaded load(const RunConfig& cfg, bool unchecked) {
  auto g = load_group(cfg, unchecked);
  auto base = parse_subgroup(g, cfg.base, std::nullopt);
  return {g, base};
}

// ---------------------------------------------------------------- commands

int cmd_lattice(const RunConfig& cfg) {
  const auto [g, base] = load(cfg, cfg.unchecked);
  const auto cen = census(lattice_for(cfg, base));
  const auto json = census_to_json(cen).dump(2) + "\n";
  const auto dot = hasse_to_dot(cen.lattice);
  emit(cfg, "census.json", json);
  emit(cfg, "hasse.dot", dot);
  if (cfg.format == "json") {
    std::cout << json;
  } else if (cfg.format == "dot") {
    std::cout << dot;
  } else {
    const auto& lat = cen.lattice;
    std::cout << "group " << g->name() << " order " << g->order() << ", base " << base.describe() << "\n";
    std::cout << "index " << to_string(cen.index) << ", dim commutant " << cen.dim_commutant << "\n";
    std::cout << "lattice size " << lat.size() << ", atoms " << lat.atoms.size() << ", coatoms "
              << lat.coatoms.size() << "\n";
    for (std::size_t i = 0; i < lat.size(); ++i) std::cout << "  " << i << ": " << lat.nodes[i].describe() << "\n";
  }
  return kExitPass;
}

int cmd_angles(const RunConfig& cfg) {
  const auto [g, base] = load(cfg, cfg.unchecked);
  const auto lat = lattice_for(cfg, base);
  const auto pairs = select_pairs(cfg, lat);
  const auto csv = angle_csv(lat, pairs);
  emit(cfg, "alpha.csv", csv.alpha);
  emit(cfg, "beta.csv", csv.beta);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& [p, q] : pairs) {
      Json x = report_to_json(classify(Quadruple::make(lat.base(), lat.nodes[p], lat.nodes[q])));
      x["p"] = p;
      x["q"] = q;
      arr.push_back(std::move(x));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "# alpha\n" << csv.alpha << "# beta\n" << csv.beta;
  }
  return kExitPass;
}

int cmd_classify(const RunConfig& cfg) {
  const auto [g, base] = load(cfg, cfg.unchecked);
  const auto lat = lattice_for(cfg, base);
  const auto pairs = select_pairs(cfg, lat);
  int code = kExitPass;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& [p, q] : pairs) {
    const auto quad = Quadruple::make(lat.base(), lat.nodes[p], lat.nodes[q]);
    const auto report = classify(quad);
    Json x;
    x["p"] = p;
    x["q"] = q;
    x["p_subgroup"] = lat.nodes[p].describe();
    x["q_subgroup"] = lat.nodes[q].describe();
    x["report"] = report_to_json(report);
    text << p << " " << q << " [" << lat.nodes[p].describe() << "] [" << lat.nodes[q].describe() << "]";
    text << " cos_alpha=" << (report.cos_alpha ? report.cos_alpha->to_string() : "NA");
    text << " cos_beta=" << (report.cos_beta ? report.cos_beta->to_string() : "NA");
    text << (report.commuting ? " commuting" : "") << (report.cocommuting ? " cocommuting" : "")
         << (report.parallelogram ? " parallelogram" : "") << (report.nested ? " nested" : "");

    const auto sym = sym_battery(quad, cfg.seed, cfg.seed + 1);
    x["sym"] = sym_battery_to_json(sym);
    if (!sym.consistent()) {
      code = kExitTheorem;
      text << " SYM-INCONSISTENT";
    }
    if (report.commuting && p != 0 && q != 0) {
      const auto po2 = po2_battery(quad, cfg.seed, cfg.seed + 1);
      x["po2"] = po2_battery_to_json(po2);
      if (!po2.consistent()) {
        code = kExitTheorem;
        text << " PO2-INCONSISTENT";
      }
    }
    const bool atoms = std::find(lat.atoms.begin(), lat.atoms.end(), p) != lat.atoms.end() &&
                       std::find(lat.atoms.begin(), lat.atoms.end(), q) != lat.atoms.end();
    if (atoms && p != q) {
      auto td = report.trace;
      td.minimal_pair = true;
      try {
        const auto mini = check_mini(td);
        x["mini"] = mini_check_to_json(mini);
        text << " mini:" << (mini.below_half ? "below-half" : "NOT-below-half");
        if (!mini.below_half) code = kExitTheorem;
      } catch (const Error& e) {
        x["mini"] = {{"error", e.what()}};
        text << " mini-error";
        code = kExitTheorem;
      }
    }
    text << "\n";
    arr.push_back(std::move(x));
  }
  const auto json = arr.dump(2) + "\n";
  emit(cfg, "classify.json", json);
  std::cout << (cfg.format == "json" ? json : text.str());
  return code;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.suites = resolve_suites(cfg.suites);
  opts.seed = cfg.seed;
  opts.random_reps = cfg.reps;
  opts.limits = cfg.limits();
  VerifyResult result;
  if (cfg.has_group_source()) {
    // Axioms are part of the battery, so tables are loaded unchecked.
    const auto [g, base] = load(cfg, true);
    result = verify_group(g->name(), g, base, opts);
    result.merge(verify_abstract(opts));
  } else {
    result = verify_corpus(cfg.quick ? quick_corpus() : builtin_corpus(), opts);
  }
  const auto json = verify_result_to_json(result).dump(2) + "\n";
  emit(cfg, "verify.json", json);
  if (cfg.format == "json") {
    std::cout << json;
  } else {
    result.print(std::cout);
    std::cout << (result.passed() ? "PASS" : "FAIL") << ": " << result.checks() << " checks, " << result.failures()
              << " failures\n";
  }
  return result.passed() ? kExitPass : kExitTheorem;
}

int cmd_bounds(const RunConfig& cfg) {
  BoundReport report;
  if (cfg.has_group_source()) {
    const auto [g, base] = load(cfg, cfg.unchecked);
    const auto lat = lattice_for(cfg, base);
    LatticeStats stats{lat.size(), lat.atoms.size(), commutant_is_abelian(base)};
    report = bound_report(Rational(g->order(), base.order()), double_coset_count(base), stats);
  } else {
    if (cfg.index.empty() || cfg.double_cosets == 0) {
      input_error("bounds needs a group source, or --index and --double-cosets");
    }
    report = bound_report(parse_rational(cfg.index), cfg.double_cosets);
  }
  const auto json = bound_report_to_json(report).dump(2) + "\n";
  emit(cfg, "bounds.json", json);
  if (cfg.format == "json") {
    std::cout << json;
  } else {
    std::cout << "index " << to_string(report.index) << ", n " << report.n << "\n";
    for (const auto& c : report.checks) {
      std::cout << (c.holds ? "holds " : "FAILS ") << (c.asserted ? "" : "(reported) ") << c.name << ": "
                << c.observed << " vs " << c.bound << "\n";
    }
  }
  return report.asserted_hold() ? kExitPass : kExitTheorem;
}

int cmd_abstract(const RunConfig& cfg) {
  const auto text = read_text_file(cfg.trace_file);
  const auto list = trace_data_list_from_json(parse_json_text(text, cfg.trace_file));
  int code = kExitPass;
  Json arr = Json::array();
  std::ostringstream out;
  for (const auto& td : list) {
    const auto report = classify(td);
    Json x = report_to_json(report);
    out << "cos_alpha=" << (report.cos_alpha ? report.cos_alpha->to_string() : "NA")
        << " cos_beta=" << (report.cos_beta ? report.cos_beta->to_string() : "NA")
        << (report.commuting ? " commuting" : "") << (report.cocommuting ? " cocommuting" : "")
        << (report.parallelogram ? " parallelogram" : "");
    if (td.minimal_pair.value_or(false)) {
      const auto mini = check_mini(td);
      x["mini"] = mini_check_to_json(mini);
      out << " lhs=" << to_string(mini.lhs) << " rhs=" << to_string(mini.rhs)
          << (mini.below_half ? " below-half" : " NOT-below-half") << (mini.tight ? " tight" : "");
      if (!mini.below_half) code = kExitTheorem;
    }
    out << "\n";
    arr.push_back(std::move(x));
  }
  const auto json = (list.size() == 1 ? arr[0] : arr).dump(2) + "\n";
  emit(cfg, "abstract.json", json);
  std::cout << (cfg.format == "json" ? json : out.str());
  return code;
}

void add_group_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "cyclic|dihedral|symmetric|elementary_abelian|quaternion");
  sub->add_option("--n", cfg.n, "family parameter");
  sub->add_option("--p", cfg.p, "elementary_abelian prime");
  sub->add_option("--k", cfg.k, "elementary_abelian rank");
  sub->add_option("--group", cfg.group_spec, "group spec such as cyclic:2*symmetric:3");
  sub->add_option("--table", cfg.table, "JSON multiplication table file");
  sub->add_option("--perms", cfg.perms, "permutation generators in cycle notation");
  sub->add_option("--degree", cfg.degree, "permutation degree");
  sub->add_flag("--unchecked", cfg.unchecked, "skip group axiom validation of --table");
  sub->add_option("--base", cfg.base, "base subgroup generators (comma-separated), or trivial");
}

void add_pair_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--pairs", cfg.pairs, "all|minimal|explicit")
      ->check(CLI::IsMember({"all", "minimal", "explicit"}));
  sub->add_option("--pair", cfg.pair, "explicit pair \"A;B\" (or \"A:B\") of generator lists");
  sub->add_option("--seed", cfg.seed, "seed for random representative choices");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angles and lattices of intermediate subfactors of group subfactors"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI config file; command-line flags take precedence");
  RunConfig cfg;
  app.add_option("--out", cfg.out, "directory for report files");
  app.add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--max-order", cfg.max_order, "group order cap");
  app.add_option("--max-nodes", cfg.max_nodes, "lattice size cap");
  app.add_option("--cache-dir", cfg.cache_dir, "lattice cache directory")->envname("INTANGLE_CACHE_DIR");
  app.fallthrough();

  auto* lattice = app.add_subcommand("lattice", "census report and Hasse diagram");
  add_group_options(lattice, cfg);
  auto* angles = app.add_subcommand("angles", "alpha/beta angle tables");
  add_group_options(angles, cfg);
  add_pair_options(angles, cfg);
  auto* classify_cmd = app.add_subcommand("classify", "pair classification with batteries");
  add_group_options(classify_cmd, cfg);
  add_pair_options(classify_cmd, cfg);
  auto* verify = app.add_subcommand("verify", "theorem batteries on a group or the built-in corpus");
  add_group_options(verify, cfg);
  verify->add_option("--suite", cfg.suites, "suite names, or all");
  verify->add_flag("--quick", cfg.quick, "small corpus");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--reps", cfg.reps, "random representative choices per quadruple");
  auto* bounds = app.add_subcommand("bounds", "counting bounds");
  add_group_options(bounds, cfg);
  bounds->add_option("--index", cfg.index, "index [M:N] when no group is given");
  bounds->add_option("--double-cosets", cfg.double_cosets, "double coset count when no group is given");
  auto* abstract = app.add_subcommand("abstract", "report for abstract trace data");
  abstract->add_option("file", cfg.trace_file, "JSON trace data (object or array)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(cfg);
    if (angles->parsed()) return cmd_angles(cfg);
    if (classify_cmd->parsed()) return cmd_classify(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (abstract->parsed()) return cmd_abstract(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded || e.kind() == ErrorKind::DegreeExceeded ? kExitCap : kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "theorem failure: " << e.what() << "\n";
    return kExitTheorem;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
