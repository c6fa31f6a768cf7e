// ktg: command-line front end for knot-theoretic ternary groups.
//
// Exit codes: 0 success / true outcome, 1 mathematically negative outcome
// (not isomorphic, incompatible, audit mismatch, identity fails), 2 invalid
// input or usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "ktg/ktg.hpp"

namespace {

using namespace ktg;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

// Raised for bad operands; carries the message printed before exiting 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Structure = std::variant<CanonicalKT, TernaryTable>;

Structure load_structure(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    try {
      return read_table(in);
    } catch (const ParseError& e) {
      throw InputError(arg + ":" + e.what());
    }
  }
  try {
    return parse_kt_spec(arg);
  } catch (const ParseError& e) {
    if (arg.find('@') == std::string::npos) {
      throw InputError("'" + arg + "':" + e.what() + " (no such table file either; specs look like Z4@2)");
    }
    throw InputError("'" + arg + "':" + e.what());
  }
}

TernaryTable as_table(const Structure& s) {
  if (auto* t = std::get_if<TernaryTable>(&s)) return *t;
  return table_from_canonical(std::get<CanonicalKT>(s));
}

ElementFormatter formatter_for(const Structure& s) {
  if (auto* c = std::get_if<CanonicalKT>(&s)) return group_formatter(c->group());
  return index_formatter();
}

CanonicalKT load_canonical(const std::string& flag, const std::string& arg) {
  try {
    return parse_kt_spec(arg);
  } catch (const ParseError& e) {
    throw InputError(flag + " '" + arg + "':" + e.what());
  }
}

Diagram load_diagram(const std::string& arg) {
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) {
    try {
      return builtin(arg.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open diagram file '" + arg + "'");
  auto name = std::filesystem::path(arg).stem().string();
  try {
    return parse_diagram(in, name);
  } catch (const ParseError& e) {
    throw InputError(arg + ":" + e.what());
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Format parse_format(const std::string& s) { return s == "text" ? Format::text : Format::lines; }

struct Budgets {
  std::uint64_t tuples = 10'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t brute = kBruteForceBudget;
};

void add_budget_flags(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--tuple-budget", b.tuples, "Max assignments for an exhaustive identity scan")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--samples", b.samples, "Samples drawn when a scan is over budget")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", b.seed, "Seed for sampled scans");
}

int run_check(const std::string& operand, const std::string& format, const Budgets& b) {
  auto s = load_structure(operand);
  auto report = property_report(as_table(s), PropertyBudget{b.tuples, b.samples, b.seed});
  std::cout << render_properties(report, parse_format(format));
  return report["knot_theoretic"] ? kOk : kNegative;
}

int run_identities(const std::string& operand, const std::string& only, const std::string& format,
                   const Budgets& b) {
  auto s = load_structure(operand);
  std::vector<const Identity*> chosen;
  if (only.empty()) {
    for (const auto& id : identity_catalog()) chosen.push_back(&id);
  } else {
    for (const auto& name : split_commas(only)) {
      try {
        chosen.push_back(&catalog_identity(name));
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--only: ") + e.what());
      }
    }
  }
  const auto table = as_table(s);
  const auto fmt = formatter_for(s);
  // The Mal'cev derived-operation laws are checked on P(a,b,c) = [a b~ c].
  std::optional<TernaryTable> derived;
  bool all_hold = true;
  for (const auto* id : chosen) {
    const bool on_derived = id->name == "malcev_1M" || id->name == "malcev_2M";
    if (id->uses_skew() && !table.has_total_skew()) {
      std::cout << "identity=" << id->name << " holds=false skew=undefined\n";
      all_hold = false;
      continue;
    }
    if (on_derived && !derived) {
      if (!table.has_total_skew()) {
        std::cout << "identity=" << id->name << " holds=false skew=undefined\n";
        all_hold = false;
        continue;
      }
      derived = derived_malcev(table);
    }
    auto r = check_identity(on_derived ? *derived : table, *id, CheckMode::automatic(b.tuples, b.samples, b.seed));
    all_hold = all_hold && r.holds;
    std::cout << render_identity(r, *id, fmt, parse_format(format));
  }
  return all_hold ? kOk : kNegative;
}

int run_enumerate(std::int64_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw InputError("order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxEnumerationOrder));
  }
  std::cout << render_enumeration(enumerate_kt(n));
  return kOk;
}

int run_table1(std::int64_t max_n, const std::string& format) {
  if (max_n < 1 || max_n > 64) throw InputError("--max must be in 1..64");
  auto audit = table1_compare(max_n);
  std::cout << render_audit(audit, parse_format(format));
  return audit.mismatches.empty() ? kOk : kNegative;
}

int run_iso(const std::string& a, const std::string& b) {
  auto s1 = load_structure(a), s2 = load_structure(b);
  IsoResult r;
  try {
    if (std::holds_alternative<CanonicalKT>(s1) && std::holds_alternative<CanonicalKT>(s2)) {
      r = iso_test(std::get<CanonicalKT>(s1), std::get<CanonicalKT>(s2));
    } else {
      r = iso_test(as_table(s1), as_table(s2));
    }
  } catch (const StructureError& e) {
    throw InputError(e.what());
  }
  std::cout << "isomorphic=" << to_bool(r.isomorphic) << '\n';
  if (r.witness) {
    auto f1 = formatter_for(s1), f2 = formatter_for(s2);
    std::cout << "witness=";
    for (std::size_t x = 0; x < r.witness->size(); ++x) {
      std::cout << (x ? " " : "") << f1(x) << "->" << f2((*r.witness)[x]);
    }
    std::cout << '\n';
  }
  return r.isomorphic ? kOk : kNegative;
}

int run_compat(const std::string& a, const std::string& b) {
  auto s1 = load_structure(a), s2 = load_structure(b);
  auto t1 = as_table(s1), t2 = as_table(s2);
  if (t1.size() != t2.size()) {
    throw InputError("carriers differ in size (" + std::to_string(t1.size()) + " vs " + std::to_string(t2.size()) + ")");
  }
  for (const auto* t : {&t1, &t2}) {
    if (!property_report(*t)["knot_theoretic"]) {
      throw InputError(std::string(t == &t1 ? a : b) + " is not a knot-theoretic ternary group");
    }
  }
  auto r = compatible(t1, t2);
  // Both operations live on the carrier {0..n-1}; quadruples print as indices.
  auto fmt = index_formatter();
  std::cout << "compatible=" << to_bool(r.compatible);
  if (r.counterexample) std::cout << " counterexample=" << render_quadruple(*r.counterexample, fmt);
  std::cout << '\n' << "companion=" << to_bool(r.companion);
  if (r.companion_counterexample) std::cout << " counterexample=" << render_quadruple(*r.companion_counterexample, fmt);
  std::cout << '\n';
  return r.compatible && r.companion ? kOk : kNegative;
}

struct ColorArgs {
  std::string diagram;
  std::string flat;
  std::string virt;
  bool enumerate = false;
  std::uint64_t cap = 1000;
  std::string vector;
  std::string method = "affine";
  std::uint64_t brute_budget = kBruteForceBudget;
};

int run_color(const ColorArgs& a) {
  auto d = load_diagram(a.diagram);
  if (!a.vector.empty()) {
    std::vector<ColoringPair> catalog;
    try {
      catalog = standard_catalog(a.vector);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--vector: ") + e.what());
    }
    auto v = invariant_vector(d, catalog);
    std::cout << "diagram=" << d.name << " catalog=" << a.vector << " vector=[";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
    std::cout << "]\n";
    if (a.flat.empty()) return kOk;
  }
  if (a.flat.empty()) throw InputError("--flat is required");
  ColoringPair p{load_canonical("--flat", a.flat), std::nullopt};
  if (!a.virt.empty()) p.virt = load_canonical("--virt", a.virt);
  try {
    check_pair(d, p);
  } catch (const StructureError& e) {
    std::cerr << "ktg: " << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (a.method == "affine" || a.method == "both") std::cout << render_coloring(d.name, p, count_affine(d, p));
  if (a.method == "brute" || a.method == "both") {
    try {
      std::cout << render_coloring(d.name, p, count_bruteforce(d, p, a.brute_budget));
    } catch (const BudgetExceeded& e) {
      throw InputError(e.what());
    }
  }
  if (a.enumerate) {
    try {
      for (const auto& f : enumerate_colorings(d, p, a.cap, a.brute_budget)) {
        std::cout << render_coloring_list(f, p.flat.group());
      }
    } catch (const BudgetExceeded& e) {
      throw InputError(e.what());
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot-theoretic ternary groups: verification, classification and diagram colorings"};
  app.require_subcommand(1);
  Budgets budgets;

  std::string operand, operand2, format = "lines", only;
  std::int64_t order = 0, max_n = 64;
  ColorArgs color;

  auto* check = app.add_subcommand("check", "Property report for a structure spec or table file");
  check->add_option("structure", operand, "Spec like Z2xZ4@(1,0) or a table file")->required();
  check->add_option("--format", format)->check(CLI::IsMember({"lines", "text"}));
  add_budget_flags(check, budgets);

  auto* ids = app.add_subcommand("identities", "Check catalog identities");
  ids->add_option("structure", operand)->required();
  ids->add_option("--only", only, "Comma-separated identity names");
  ids->add_option("--format", format)->check(CLI::IsMember({"lines", "text"}));
  add_budget_flags(ids, budgets);

  auto* en = app.add_subcommand("enumerate", "Knot-theoretic ternary groups of order n up to isomorphism");
  en->add_option("n", order)->required();

  auto* t1 = app.add_subcommand("table1", "Audit the reference counts for orders 1..N");
  t1->add_option("--max", max_n);
  t1->add_option("--format", format)->check(CLI::IsMember({"lines", "text"}));

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("first", operand)->required();
  iso->add_option("second", operand2)->required();

  auto* cmp = app.add_subcommand("compat", "Compatibility of a flat and a virtual operation");
  cmp->add_option("flat", operand)->required();
  cmp->add_option("virt", operand2)->required();

  auto* col = app.add_subcommand("color", "Count colorings of a diagram");
  col->add_option("diagram", color.diagram, "Diagram file or builtin:<name>")->required();
  col->add_option("--flat", color.flat);
  col->add_option("--virt", color.virt);
  col->add_flag("--enumerate", color.enumerate);
  col->add_option("--cap", color.cap, "Max colorings listed by --enumerate");
  col->add_option("--vector", color.vector, "Catalog: order2 or order4");
  col->add_option("--method", color.method)->check(CLI::IsMember({"affine", "brute", "both"}));
  col->add_option("--brute-budget", color.brute_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ktg: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (*check) return run_check(operand, format, budgets);
    if (*ids) return run_identities(operand, only, format, budgets);
    if (*en) return run_enumerate(order);
    if (*t1) return run_table1(max_n, format);
    if (*iso) return run_iso(operand, operand2);
    if (*cmp) return run_compat(operand, operand2);
    if (*col) return run_color(color);
  } catch (const InputError& e) {
    std::cerr << "ktg: error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "ktg: error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
