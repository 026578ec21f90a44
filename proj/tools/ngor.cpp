// ngor - exact decision and enumeration tool for decorated resolution
// graphs. Subcommands: check, enumerate, classify, genus, oracle.
//
// Exit codes: 0 = affirmative verdict, 1 = negative verdict, 2 = usage or
// input error.

#include "ngor/jsonio.hpp"
#include "ngor/ngor.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace ngor;

DecoratedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_graph(in);
}

// "a=1,b=2" -> pairs; values may be negative (genus cycles).
std::vector<std::pair<std::string, std::int64_t>> parse_assignments(
    const std::string& text) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("expected <id>=<value>, got '" + item + "'");
    std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(value, &used);
      if (used != value.size()) throw Error("");
      out.emplace_back(item.substr(0, eq), v);
    } catch (...) {
      throw Error("bad integer '" + value + "' in assignment list");
    }
  }
  return out;
}

std::size_t resolve_vertex(const DecoratedGraph& g, const std::string& id) {
  auto idx = g.index_of(id);
  if (!idx) throw Error("unknown vertex '" + id + "'");
  return *idx;
}

std::string cycle_sum(const DecoratedGraph& g,
                      const std::vector<Rational>& z) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (z[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (z[i] != 1) out += to_string(z[i]) + "*";
    out += "E[" + g.id(i) + "]";
  }
  return out.empty() ? "0" : out;
}

std::string tuple_of(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string file;
  std::string format = "text";
  bool quiet = false;
  std::string with_e;
  std::string cycle;
  std::int64_t max_n = 64;
  std::int64_t max_e_probe = 16;
  std::int64_t max_e = 6;
  bool allow_non_minimal = false;
  bool no_du_val = false;
  bool check_doubling = false;
  unsigned jobs = 1;
  double guard = 1e9;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("file", opt.file, "graph file")->required();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured", "dot"}))
      ->capture_default_str();
  cmd->add_flag("--quiet", opt.quiet, "suppress notes and warnings");
}

DecoratedGraph apply_with_e(const DecoratedGraph& g, const std::string& assignments) {
  std::vector<std::int64_t> e(g.size(), 0);
  std::vector<char> set(g.size(), 0);
  if (g.has_self_intersections()) {
    e = g.self_intersection_values();
    std::fill(set.begin(), set.end(), 1);
  }
  for (const auto& [id, value] : parse_assignments(assignments)) {
    std::size_t i = resolve_vertex(g, id);
    if (value < 1)
      throw Error("self-intersection weight for '" + id + "' must be >= 1");
    e[i] = value;
    set[i] = 1;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!set[i])
      throw Error("no self-intersection weight for vertex '" + g.id(i) + "'");
  return g.with_self_intersections(std::move(e));
}

int cmd_check(const Options& opt) {
  DecoratedGraph g = load_graph(opt.file);
  if (!opt.with_e.empty())
    g = apply_with_e(g, opt.with_e);
  else if (!g.has_self_intersections())
    throw Error(
        "graph carries no self-intersection weights; add e=... to the "
        "vertex lines or pass --with-e");

  if (opt.format == "dot") {
    std::cout << to_dot(g);
    return is_negative_definite(intersection_matrix(g)) && is_n_gorenstein(g)
               ? 0
               : 1;
  }

  bool definite = is_negative_definite(intersection_matrix(g));
  Classification cls = classify(g);
  if (!definite) {
    if (opt.format == "structured") {
      ordered_json out;
      out["command"] = "check";
      out["negative_definite"] = false;
      out["n_gorenstein"] = false;
      out["classification"] = to_json(cls);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "negative definite: no\n";
      std::cout << "n-Gorenstein: no (anti-canonical cycle undefined)\n";
    }
    return 1;
  }

  CycleReport report = anticanonical_cycle(g);
  if (opt.format == "structured") {
    ordered_json out;
    out["command"] = "check";
    out["negative_definite"] = true;
    ordered_json body = to_json(g, report);
    for (auto& [key, value] : body.items()) out[key] = value;
    out["n_gorenstein"] = report.integral;
    out["classification"] = to_json(cls);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "negative definite: yes\n";
    std::cout << "Z_K = " << cycle_sum(g, report.z) << "\n";
    std::cout << "integral: " << yes_no(report.integral) << "\n";
    std::cout << "effective: " << yes_no(report.effective) << "\n";
    std::cout << "n-Gorenstein: " << yes_no(report.integral) << "\n";
    if (cls.du_val)
      std::cout << "Du Val: " << cls.du_val->label() << "\n";
    if (cls.cusp) std::cout << "cusp graph: yes\n";
    if (cls.minimal) std::cout << "minimal: " << yes_no(*cls.minimal) << "\n";
    if (!opt.quiet)
      for (const std::string& w : report.warnings)
        std::cerr << "note: " << w << "\n";
  }
  return report.integral ? 0 : 1;
}

int cmd_enumerate(const Options& opt) {
  DecoratedGraph g = load_graph(opt.file);
  if (g.has_self_intersections() && !opt.quiet)
    std::cerr << "note: input self-intersection weights are ignored by "
                 "enumeration\n";

  EnumerationConfig cfg;
  cfg.max_n = opt.max_n;
  cfg.max_e_probe = opt.max_e_probe;
  cfg.require_minimal = !opt.allow_non_minimal;
  cfg.include_du_val = !opt.no_du_val;
  cfg.jobs = opt.jobs;
  EnumerationResult result = enumerate_weights(g, cfg);

  if (opt.check_doubling) {
    auto fresh = doubling_new_n(g, cfg);
    if (!fresh.empty() && !opt.quiet)
      std::cerr << "warning: doubling max_n to " << 2 * cfg.max_n
                << " found " << fresh.size()
                << " new coefficient vector(s); raise --max-n\n";
  }

  if (opt.format == "dot") {
    std::cout << to_dot(g);
  } else if (opt.format == "structured") {
    ordered_json out;
    out["command"] = "enumerate";
    ordered_json body = to_json(g, result);
    for (auto& [key, value] : body.items()) out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "vertices:";
    for (const auto& id : g.vertex_ids()) std::cout << " " << id;
    std::cout << "\n";
    for (const Solution& s : result.solutions)
      std::cout << "solution n=" << tuple_of(s.n) << " e=" << tuple_of(s.e)
                << "\n";
    for (const SolutionFamily& f : result.families) {
      std::cout << "family n=" << tuple_of(f.n);
      std::cout << " fixed e:";
      bool any = false;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (f.n[i] > 0) {
          std::cout << " " << g.id(i) << "=" << f.fixed_e[i];
          any = true;
        }
      if (!any) std::cout << " none";
      std::cout << " free:";
      for (std::size_t i : f.free_vertices) std::cout << " " << g.id(i);
      std::cout << "\n";
      for (const auto& elem : f.minimal_elements)
        std::cout << "  minimal element " << tuple_of(elem)
                  << "; all coordinate-wise larger values admissible\n";
      if (f.truncated)
        std::cout << "  (antichain truncated at the probe cap "
                  << opt.max_e_probe << ")\n";
    }
    for (const DuValSolution& d : result.du_val)
      std::cout << "Du Val weighting e=" << tuple_of(d.e) << " (Z_K = 0)\n";
    std::cout << "exhaustive for n <= " << cfg.max_n
              << " coordinate-wise; larger solutions, if any, are not "
                 "listed\n";
  }
  return result.empty() ? 1 : 0;
}

int cmd_classify(const Options& opt) {
  DecoratedGraph g = load_graph(opt.file);
  Classification cls = classify(g);
  if (opt.format == "dot") {
    std::cout << to_dot(g);
  } else if (opt.format == "structured") {
    ordered_json out;
    out["command"] = "classify";
    ordered_json body = to_json(cls);
    for (auto& [key, value] : body.items()) out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Du Val: " << (cls.du_val ? cls.du_val->label() : "no")
              << "\n";
    std::cout << "cusp graph: " << yes_no(cls.cusp) << "\n";
    if (cls.minimal)
      std::cout << "minimal: " << yes_no(*cls.minimal) << "\n";
    else
      std::cout << "minimal: unknown (graph carries no weights)\n";
  }
  return 0;
}

int cmd_genus(const Options& opt) {
  DecoratedGraph g = load_graph(opt.file);
  if (!g.has_self_intersections())
    throw Error("genus needs self-intersection weights on the graph");
  Cycle d(g.size(), 0);
  for (const auto& [id, value] : parse_assignments(opt.cycle))
    d[resolve_vertex(g, id)] = value;
  Rational genus = arithmetic_genus(g, d);
  if (opt.format == "dot") {
    std::cout << to_dot(g);
  } else if (opt.format == "structured") {
    ordered_json out;
    out["command"] = "genus";
    out["cycle"] = json_vertex_map(g, d);
    out["genus"] = to_string(genus);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "genus: " << to_string(genus) << "\n";
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  DecoratedGraph g = load_graph(opt.file);
  auto solutions = brute_force_oracle(g, opt.max_n, opt.max_e,
                                      !opt.allow_non_minimal, opt.guard);
  if (opt.format == "dot") {
    std::cout << to_dot(g);
  } else if (opt.format == "structured") {
    ordered_json out;
    out["command"] = "oracle";
    out["max_n"] = opt.max_n;
    out["max_e"] = opt.max_e;
    ordered_json list = ordered_json::array();
    for (const Solution& s : solutions) list.push_back(to_json(g, s));
    out["solutions"] = list;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Solution& s : solutions)
      std::cout << "solution n=" << tuple_of(s.n) << " e=" << tuple_of(s.e)
                << "\n";
    std::cout << solutions.size() << " solution(s) in the box n <= "
              << opt.max_n << ", e <= " << opt.max_e << "\n";
  }
  return solutions.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tools for decorated resolution graphs: anti-canonical cycle, "
      "numerically Gorenstein test, weight enumeration"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* check = app.add_subcommand(
      "check", "decide whether a weighted graph is numerically Gorenstein");
  add_common(check, opt);
  check->add_option("--with-e", opt.with_e,
                    "self-intersection weights as <id>=<e>,... overriding "
                    "or completing the file");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate",
      "enumerate all weightings (n, e) solving the adjunction system");
  add_common(enumerate, opt);
  enumerate->add_option("--max-n", opt.max_n, "search bound on the n_i")
      ->capture_default_str();
  enumerate
      ->add_option("--max-e-probe", opt.max_e_probe,
                   "probe cap for minimal free weights")
      ->capture_default_str();
  enumerate->add_flag("--allow-non-minimal", opt.allow_non_minimal,
                      "permit e=1 on vertices with p=0");
  enumerate->add_flag("--no-du-val", opt.no_du_val,
                      "omit the all-2 Du Val weighting");
  enumerate->add_flag("--check-doubling", opt.check_doubling,
                      "warn when doubling --max-n finds new solutions");
  enumerate->add_option("--jobs", opt.jobs, "worker threads")
      ->capture_default_str();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "recognize Du Val / cusp / minimal");
  add_common(classify_cmd, opt);

  CLI::App* genus = app.add_subcommand(
      "genus", "arithmetic genus of an integer cycle by adjunction");
  add_common(genus, opt);
  genus
      ->add_option("--cycle", opt.cycle,
                   "cycle coefficients as <id>=<int>,... (others 0)")
      ->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force box search (ground truth for small graphs)");
  add_common(oracle, opt);
  oracle->add_option("--max-n", opt.max_n, "box bound on the n_i")
      ->capture_default_str();
  oracle->add_option("--max-e", opt.max_e, "box bound on the e_i")
      ->capture_default_str();
  oracle->add_flag("--allow-non-minimal", opt.allow_non_minimal,
                   "permit e=1 on vertices with p=0");
  oracle->add_option("--guard", opt.guard, "maximum box size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (classify_cmd->parsed()) return cmd_classify(opt);
    if (genus->parsed()) return cmd_genus(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
