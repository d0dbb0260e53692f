#include "nvalued/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "nvalued/closed_forms.hpp"
#include "nvalued/coset.hpp"
#include "nvalued/growth.hpp"
#include "nvalued/group.hpp"
#include "nvalued/nbonacci.hpp"
#include "nvalued/symbolic.hpp"
#include "nvalued/zplus.hpp"

namespace nvalued::cli {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string display_word(const OrbitClass& c) {
  const std::string text = render(c);
  return text.empty() ? "\xce\x9b" : text;
}

void emit_json(std::ostream& out, const json& report) {
  out << report.dump(2) << "\n";
}

// ---------------------------------------------------------------- growth --

struct GrowthParams {
  int s = 2;
  int m = 2;
  int k = 0;
  std::string format = "csv";
  std::uint64_t cap = 10'000'000;
  int threads = 1;
};

int run_growth(const GrowthParams& p, std::ostream& out) {
  const GroupSpec spec(p.s, p.m);
  const CosetGroup group(spec);
  if (p.k < 0) throw std::invalid_argument("growth: --k must be >= 0");
  if (p.threads < 1) throw std::invalid_argument("growth: --threads must be >= 1");

  GrowthOptions opts;
  opts.max_elements = p.cap;
  opts.threads = p.threads;
  const GrowthResult growth =
      growth_sequence(group, group.generator(), p.k, opts);
  const std::vector<std::uint64_t> counts = new_counts(growth.xi);
  const std::optional<GrowthFamily> family = family_for(spec);

  bool all_match = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "k,xi,s_k,closed_form,ratio,match\n";
  for (std::size_t k = 0; k < growth.xi.size(); ++k) {
    const std::uint64_t xi = growth.xi[k];
    json row;
    row["k"] = k;
    row["xi"] = xi;
    row["s_k"] = counts[k];
    std::string closed_text;
    std::string ratio_text;
    std::string match_text;
    row["closed_form"] = nullptr;
    row["ratio"] = nullptr;
    row["match"] = nullptr;
    if (family) {
      const ClosedFormValue value =
          closed_form_xi(*family, spec, static_cast<int>(k));
      if (value.exact) {
        const bool match = BigInt(xi) == value.integer;
        all_match = all_match && match;
        closed_text = value.integer.str();
        match_text = match ? "yes" : "no";
        row["closed_form"] = closed_text;
        row["match"] = match;
      } else {
        const double ratio = static_cast<double>(xi) / value.estimate;
        closed_text = fixed6(value.estimate);
        ratio_text = fixed6(ratio);
        row["closed_form"] = closed_text;
        row["ratio"] = ratio;
      }
    }
    csv << k << ',' << xi << ',' << counts[k] << ',' << closed_text << ','
        << ratio_text << ',' << match_text << '\n';
    rows.push_back(std::move(row));
  }

  if (p.format == "json") {
    json report;
    report["command"] = "growth";
    report["params"] = {{"s", p.s},       {"m", p.m},
                        {"k", p.k},       {"cap", p.cap},
                        {"threads", p.threads}};
    report["family"] = family ? json(family_name(*family)) : json(nullptr);
    report["rows"] = std::move(rows);
    report["all_match"] = all_match;
    report["truncated"] = growth.truncated;
    emit_json(out, report);
  } else {
    out << csv.str();
  }
  if (growth.truncated) return kExitResource;
  return all_match ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- axioms --

struct AxiomsParams {
  std::string group = "zplus";
  int s = 2;
  int m = 3;
  int max = -1;
  std::string format = "csv";
};

struct AxiomCheckRow {
  std::string check;
  std::uint64_t cases = 0;
  bool pass = true;
  std::string counterexample;
};

template <MultiValuedGroup G>
std::vector<AxiomCheckRow> sweep_axioms(
    const G& g, const std::vector<typename G::Element>& elements,
    const std::function<std::string(const typename G::Element&)>& show) {
  AxiomCheckRow assoc{"associativity", 0, true, ""};
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      for (const auto& z : elements) {
        ++assoc.cases;
        if (!check_associativity(g, x, y, z)) {
          assoc.pass = false;
          assoc.counterexample =
              "x=" + show(x) + " y=" + show(y) + " z=" + show(z);
          break;
        }
      }
      if (!assoc.pass) break;
    }
    if (!assoc.pass) break;
  }

  AxiomCheckRow unit{"unit", 0, true, ""};
  AxiomCheckRow inverse{"inverse", 0, true, ""};
  for (const auto& x : elements) {
    ++unit.cases;
    if (unit.pass && !check_unit(g, x)) {
      unit.pass = false;
      unit.counterexample = "x=" + show(x);
    }
    ++inverse.cases;
    if (inverse.pass && !check_inverse(g, x)) {
      inverse.pass = false;
      inverse.counterexample = "x=" + show(x);
    }
  }
  return {assoc, unit, inverse};
}

int run_axioms(const AxiomsParams& p, std::ostream& out) {
  std::vector<AxiomCheckRow> checks;
  json params;
  if (p.group == "zplus") {
    const int max = p.max < 0 ? 30 : p.max;
    params = {{"group", "zplus"}, {"max", max}};
    std::vector<std::uint64_t> elements(max + 1);
    for (int i = 0; i <= max; ++i) elements[i] = i;
    checks = sweep_axioms(ZPlusGroup{}, elements,
                          [](const std::uint64_t& x) { return std::to_string(x); });
  } else if (p.group == "coset") {
    const int max = p.max < 0 ? 4 : p.max;
    const GroupSpec spec(p.s, p.m);
    params = {{"group", "coset"}, {"s", p.s}, {"m", p.m}, {"max", max}};
    checks = sweep_axioms(CosetGroup(spec), classes_up_to_length(spec, max),
                          [](const OrbitClass& x) { return display_word(x); });
  } else {
    throw std::invalid_argument("axioms: --group must be zplus or coset");
  }

  bool all_pass = true;
  for (const AxiomCheckRow& row : checks) all_pass = all_pass && row.pass;

  if (p.format == "json") {
    json rows = json::array();
    for (const AxiomCheckRow& row : checks) {
      rows.push_back({{"check", row.check},
                      {"cases", row.cases},
                      {"pass", row.pass},
                      {"counterexample", row.counterexample.empty()
                                             ? json(nullptr)
                                             : json(row.counterexample)}});
    }
    json report;
    report["command"] = "axioms";
    report["params"] = std::move(params);
    report["rows"] = std::move(rows);
    report["all_pass"] = all_pass;
    emit_json(out, report);
  } else {
    out << "check,cases,pass,counterexample\n";
    for (const AxiomCheckRow& row : checks) {
      out << row.check << ',' << row.cases << ',' << (row.pass ? "yes" : "no")
          << ',' << row.counterexample << '\n';
    }
  }
  return all_pass ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------- nbonacci --

struct NBonacciParams {
  int n = 2;
  int k = 0;
  std::string method = "all";
  std::string format = "csv";
};

int run_nbonacci(const NBonacciParams& p, std::ostream& out) {
  const bool want_exact = p.method == "exact" || p.method == "all";
  const bool want_binet = p.method == "binet" || p.method == "all";
  const bool want_rnd = p.method == "rnd" || p.method == "all";

  std::optional<BigInt> exact;
  if (want_exact) exact = nbonacci_exact(p.n, p.k);
  std::optional<double> binet;
  if (want_binet) binet = binet_nbonacci(p.n, p.k);

  std::optional<std::int64_t> rnd;
  std::string rnd_note;
  if (want_rnd) {
    if (p.method == "rnd") {
      rnd = rnd_formula(p.n, p.k);  // out of range propagates as usage error
    } else {
      const int limit = rnd_precision_limit(p.n);
      if (p.k <= limit) {
        rnd = rnd_formula(p.n, p.k);
      } else {
        rnd_note = "beyond certified range [0, " + std::to_string(limit) + "]";
      }
    }
  }

  bool all_agree = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "method,value,agrees\n";
  if (exact) {
    csv << "exact," << exact->str() << ",\n";
    rows.push_back(
        {{"method", "exact"}, {"value", exact->str()}, {"agrees", nullptr}});
  }
  if (binet) {
    std::string agrees_text;
    json agrees = nullptr;
    if (exact) {
      const bool ok =
          std::abs(*binet - exact->convert_to<double>()) < 1e-5;
      all_agree = all_agree && ok;
      agrees_text = ok ? "yes" : "no";
      agrees = ok;
    }
    csv << "binet," << fixed6(*binet) << ',' << agrees_text << '\n';
    rows.push_back(
        {{"method", "binet"}, {"value", *binet}, {"agrees", agrees}});
  }
  if (want_rnd) {
    if (rnd) {
      std::string agrees_text;
      json agrees = nullptr;
      if (exact) {
        const bool ok = BigInt(*rnd) == *exact;
        all_agree = all_agree && ok;
        agrees_text = ok ? "yes" : "no";
        agrees = ok;
      }
      csv << "rnd," << *rnd << ',' << agrees_text << '\n';
      rows.push_back({{"method", "rnd"}, {"value", *rnd}, {"agrees", agrees}});
    } else {
      csv << "rnd,," << '\n';
      rows.push_back({{"method", "rnd"},
                      {"value", nullptr},
                      {"agrees", nullptr},
                      {"note", rnd_note}});
    }
  }

  if (p.format == "json") {
    json report;
    report["command"] = "nbonacci";
    report["params"] = {{"n", p.n}, {"k", p.k}, {"method", p.method}};
    report["rows"] = std::move(rows);
    report["all_agree"] = all_agree;
    emit_json(out, report);
  } else {
    out << csv.str();
  }
  return all_agree ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ tree --

struct TreeParams {
  int depth = 0;
  std::string highlight;
  std::string out_path;
  std::string json_out;
  std::string format = "csv";
};

std::vector<HighlightPath> named_highlights(const std::string& csv_names,
                                            int depth) {
  std::vector<HighlightPath> out;
  if (csv_names.empty() || depth == 0) return out;
  std::stringstream stream(csv_names);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (name == "fibonacci") {
      out.push_back(
          {name, Morphism::fibonacci().fixed_point_prefix('a', depth)});
    } else if (name == "thue-morse") {
      out.push_back(
          {name, Morphism::thue_morse().fixed_point_prefix('a', depth)});
    } else {
      throw std::invalid_argument(
          "tree: unknown highlight '" + name +
          "' (expected fibonacci or thue-morse)");
    }
  }
  return out;
}

int run_tree(const TreeParams& p, std::ostream& out) {
  const CubelessTree tree = build_tree(p.depth);
  const std::vector<HighlightPath> highlights =
      named_highlights(p.highlight, p.depth);

  bool sizes_match = true;
  bool all_sorted = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "level,size,expected_size,sorted\n";
  for (int level = 0; level <= tree.depth(); ++level) {
    const std::uint64_t size = tree.levels[level].size();
    const BigInt expected = nbonacci_exact(2, level + 1);
    const bool sorted = check_level_sorted(tree, level);
    sizes_match = sizes_match && BigInt(size) == expected;
    all_sorted = all_sorted && sorted;
    csv << level << ',' << size << ',' << expected.str() << ','
        << (sorted ? "yes" : "no") << '\n';
    rows.push_back({{"level", level},
                    {"size", size},
                    {"expected_size", expected.str()},
                    {"sorted", sorted}});
  }

  if (!p.out_path.empty()) {
    std::ofstream file(p.out_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("tree: cannot open output file " +
                                  p.out_path);
    }
    file << export_dot(tree, highlights);
  }
  if (!p.json_out.empty()) {
    std::ofstream file(p.json_out, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("tree: cannot open output file " +
                                  p.json_out);
    }
    file << export_json(tree);
  }

  const bool pass = sizes_match && all_sorted;
  if (p.format == "json") {
    json report;
    report["command"] = "tree";
    report["params"] = {{"depth", p.depth}, {"highlight", p.highlight}};
    report["rows"] = std::move(rows);
    report["sizes_match"] = sizes_match;
    report["all_sorted"] = all_sorted;
    json names = json::array();
    for (const HighlightPath& h : highlights) {
      names.push_back({{"name", h.name}, {"word", h.word}});
    }
    report["highlights"] = std::move(names);
    emit_json(out, report);
  } else {
    out << csv.str();
  }
  return pass ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------------- qk --

struct QkParams {
  std::string psi;
  int k = 0;
  std::string format = "csv";
};

int run_qk(const QkParams& p, std::ostream& out) {
  validate_psi(p.psi);
  if (p.k < 0) throw std::invalid_argument("qk: --k must be >= 0");

  std::vector<std::uint64_t> values;
  bool all_hold = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "k,theta,q,recurrence\n";
  for (int k = 0; k <= p.k; ++k) {
    const std::string theta = theta_word(p.psi, k);
    values.push_back(q_count(p.psi, k));
    std::string recurrence_text;
    json recurrence = nullptr;
    if (k >= 2) {
      const bool holds = values[k] == values[k - 1] + values[k - 2];
      all_hold = all_hold && holds;
      recurrence_text = holds ? "yes" : "no";
      recurrence = holds;
    }
    csv << k << ',' << theta << ',' << values[k] << ',' << recurrence_text
        << '\n';
    rows.push_back({{"k", k},
                    {"theta", theta},
                    {"q", values[k]},
                    {"recurrence", recurrence}});
  }

  if (p.format == "json") {
    json report;
    report["command"] = "qk";
    report["params"] = {{"psi", p.psi}, {"k", p.k}};
    report["rows"] = std::move(rows);
    report["recurrence_holds"] = all_hold;
    emit_json(out, report);
  } else {
    out << csv.str();
  }
  return all_hold ? kExitOk : kExitViolation;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "n-valued coset groups: growth tables with formula cross-checks, "
      "axiom verification, n-bonacci evaluation, the cubeless-word tree, "
      "and lexicographic tail counts"};
  app.require_subcommand(1);
  app.footer(
      "CSV columns:\n"
      "  growth:   k,xi,s_k,closed_form,ratio,match\n"
      "  axioms:   check,cases,pass,counterexample\n"
      "  nbonacci: method,value,agrees\n"
      "  tree:     level,size,expected_size,sorted\n"
      "  qk:       k,theta,q,recurrence\n"
      "Exit codes: 0 pass, 1 property violation, 2 usage error, "
      "3 resource cap exceeded.");

  GrowthParams growth_p;
  CLI::App* growth_cmd = app.add_subcommand(
      "growth",
      "Enumerate the growth sequence of a coset group and cross-check the "
      "closed form; exits 1 on any exact mismatch");
  growth_cmd->add_option("--s", growth_p.s, "number of free factors")
      ->required();
  growth_cmd->add_option("--m", growth_p.m, "order of each cyclic factor")
      ->required();
  growth_cmd->add_option("--k", growth_p.k, "number of steps")->required();
  growth_cmd->add_option("--cap", growth_p.cap,
                         "distinct-element cap (exit 3 when exceeded)");
  growth_cmd->add_option("--threads", growth_p.threads,
                         "frontier-expansion workers (output is identical "
                         "for any value)");
  add_format_option(growth_cmd, growth_p.format);

  AxiomsParams axioms_p;
  CLI::App* axioms_cmd = app.add_subcommand(
      "axioms",
      "Exhaustively verify associativity, unit, and inverse axioms; lists "
      "the first counterexample if any");
  axioms_cmd->add_option("--group", axioms_p.group, "zplus or coset")
      ->required()
      ->check(CLI::IsMember({"zplus", "coset"}));
  axioms_cmd->add_option("--s", axioms_p.s, "free factors (coset only)");
  axioms_cmd->add_option("--m", axioms_p.m, "factor order (coset only)");
  axioms_cmd->add_option(
      "--max", axioms_p.max,
      "bound: largest integer for zplus (default 30), largest class letter "
      "length for coset (default 4)");
  add_format_option(axioms_cmd, axioms_p.format);

  NBonacciParams nbonacci_p;
  CLI::App* nbonacci_cmd = app.add_subcommand(
      "nbonacci",
      "Evaluate the n-bonacci sequence by exact recurrence, the explicit "
      "root-sum formula (agreement within 1e-5), and the rounded dominant "
      "term; exits 1 if methods disagree");
  nbonacci_cmd->add_option("--n", nbonacci_p.n, "recurrence depth (>= 2)")
      ->required();
  nbonacci_cmd->add_option("--k", nbonacci_p.k, "index (>= 0)")->required();
  nbonacci_cmd
      ->add_option("--method", nbonacci_p.method,
                   "exact, binet, rnd, or all")
      ->check(CLI::IsMember({"exact", "binet", "rnd", "all"}));
  add_format_option(nbonacci_cmd, nbonacci_p.format);

  TreeParams tree_p;
  CLI::App* tree_cmd = app.add_subcommand(
      "tree",
      "Build the cubeless-word tree, report level sizes and sortedness, and "
      "optionally export Graphviz/JSON files; exits 1 if a level check "
      "fails");
  tree_cmd->add_option("--depth", tree_p.depth, "tree depth (>= 0)")
      ->required();
  tree_cmd->add_option("--highlight", tree_p.highlight,
                       "comma list of paths to color: fibonacci,thue-morse");
  tree_cmd->add_option("--out", tree_p.out_path, "write Graphviz DOT here");
  tree_cmd->add_option("--json-out", tree_p.json_out,
                       "write the {level, word, parent} JSON export here");
  add_format_option(tree_cmd, tree_p.format);

  QkParams qk_p;
  CLI::App* qk_cmd = app.add_subcommand(
      "qk",
      "Count cubeless words lexicographically >= the periodic extension of "
      "psi, and check the Fibonacci recurrence of the counts");
  qk_cmd->add_option("--psi", qk_p.psi,
                     "cubeless word starting with 'a', not ending in 'a'")
      ->required();
  qk_cmd->add_option("--k", qk_p.k, "largest extension length")->required();
  add_format_option(qk_cmd, qk_p.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (growth_cmd->parsed()) return run_growth(growth_p, out);
    if (axioms_cmd->parsed()) return run_axioms(axioms_p, out);
    if (nbonacci_cmd->parsed()) return run_nbonacci(nbonacci_p, out);
    if (tree_cmd->parsed()) return run_tree(tree_p, out);
    if (qk_cmd->parsed()) return run_qk(qk_p, out);
  } catch (const PrecisionRangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace nvalued::cli
