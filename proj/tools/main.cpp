// Command-line front end: wires the text formats to the library
// operations and emits line-oriented, timestamp-free reports suitable
// for golden-file comparison.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "monocat/bridge.hpp"
#include "monocat/category.hpp"
#include "monocat/chains.hpp"
#include "monocat/errors.hpp"
#include "monocat/ideal.hpp"
#include "monocat/logic.hpp"
#include "monocat/monoid.hpp"

namespace {

using namespace monocat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitStructural = 2;

bool g_full_trace = false;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(fmt::format("cannot open '{}'", path));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && tok[0] != '#') {
      return tok;
    }
  }
  return "";
}

Subset pick_ideal(const MonoidFile& file, const std::string& requested,
                  const std::string& path) {
  const NamedSubset* subset = nullptr;
  if (requested.empty()) {
    if (file.ideals.empty()) {
      throw ParseError(fmt::format("{}: no ideal line in the file and no "
                                   "--ideal given", path));
    }
    subset = &file.ideals.front();
  } else {
    subset = file.find_ideal(requested);
    if (subset == nullptr) {
      throw ParseError(fmt::format("{}: no ideal named '{}'", path, requested));
    }
  }
  return Subset(subset->members.begin(), subset->members.end());
}

std::string join_members(const FiniteMonoid& m, const Subset& q) {
  std::string out;
  for (Index i : q) {
    if (!out.empty()) {
      out += ',';
    }
    out += m.elements[i];
  }
  return out;
}

void print_report_lines(const ValidationReport& report, const char* label) {
  if (g_full_trace) {
    for (const auto& v : report.violations) {
      fmt::print("VIOLATION {}\n", v);
    }
  }
  if (report.ok()) {
    fmt::print("CHECK {} PASS\n", label);
  } else if (report.violations.empty()) {
    fmt::print("CHECK {} FAIL {}\n", label, report.structural.front());
  } else {
    fmt::print("CHECK {} FAIL {}\n", label, report.violations.front());
  }
}

// --- verify ---------------------------------------------------------

int run_verify(const std::string& path) {
  const std::string text = read_file(path);
  const std::string kind = first_keyword(text);
  if (kind == "monoid") {
    const auto file = parse_monoid_text(text, path);
    const auto report = verify_monoid(file.monoid);
    if (!report.structural.empty()) {
      std::cerr << "error: " << report.structural.front() << "\n";
      return kExitStructural;
    }
    print_report_lines(report, "monoid");
    return report.ok() ? kExitPass : kExitCheckFailed;
  }
  if (kind == "category") {
    const auto k = parse_category_text(text, path);
    const auto report = verify_category(k);
    if (!report.structural.empty()) {
      std::cerr << "error: " << report.structural.front() << "\n";
      return kExitStructural;
    }
    print_report_lines(report, "category");
    return report.ok() ? kExitPass : kExitCheckFailed;
  }
  throw ParseError(fmt::format("{}: expected a monoid or category file", path));
}

// --- ideals ---------------------------------------------------------

int run_ideals(const std::string& path, bool allow_unit_witness) {
  const auto file = parse_monoid_text(read_file(path), path);
  const auto found = enumerate_associative_ideals(file.monoid);
  for (const auto& ideal : found) {
    const auto weak =
        weak_simplicity_check(file.monoid, ideal.members, allow_unit_witness);
    fmt::print("IDEAL {} {} {}\n", join_members(file.monoid, ideal.members),
               ideal.prime ? "PRIME" : "NOT_PRIME",
               weak.holds ? "WEAK_SIMPLE"
                          : fmt::format("NOT_WEAK_SIMPLE {}",
                                        file.monoid.elements[*weak.failing]));
  }
  fmt::print("FOUND {}\n", found.size());
  return kExitPass;
}

// --- quotient -------------------------------------------------------

int run_quotient(const std::string& path, const std::string& ideal_name) {
  const auto file = parse_monoid_text(read_file(path), path);
  const auto q = pick_ideal(file, ideal_name, path);
  const auto assoc = is_associative_ideal(file.monoid, q);
  if (!is_ideal(file.monoid, q)) {
    fmt::print("CHECK associative-ideal FAIL not a two-sided ideal\n");
    return kExitCheckFailed;
  }
  if (!assoc.holds) {
    fmt::print("CHECK associative-ideal FAIL witness ({},{},{})\n",
               file.monoid.elements[assoc.witness->a],
               file.monoid.elements[assoc.witness->b],
               file.monoid.elements[assoc.witness->c]);
    return kExitCheckFailed;
  }
  fmt::print("# CHECK associative-ideal PASS\n");
  const auto result = quotient_to_zero(file.monoid, q);
  std::vector<NamedSubset> zero_ideal{{"zero", {result.zero}}};
  std::ostringstream out;
  print_monoid(out, result.quotient, zero_ideal);
  fmt::print("{}", out.str());

  const auto collapsed = quotient_to_unit(file.monoid, q);
  fmt::print("# quotient-to-unit order {}\n", collapsed.size());
  fmt::print("# CHECK collapse-to-unit {}\n",
             collapsed.size() == 1 ? "PASS" : "FAIL");
  return collapsed.size() == 1 ? kExitPass : kExitCheckFailed;
}

// --- pushout --------------------------------------------------------

int run_pushout(const std::string& path, const std::string& ideal_name,
                Index corpus_order, const std::vector<std::string>& extra) {
  const auto file = parse_monoid_text(read_file(path), path);
  const auto q = pick_ideal(file, ideal_name, path);
  if (!is_ideal(file.monoid, q) ||
      !is_associative_ideal(file.monoid, q).holds) {
    fmt::print("CHECK pushout FAIL ideal is not associative\n");
    return kExitCheckFailed;
  }
  std::vector<FiniteMonoid> corpus;
  for (Index order = 1; order <= corpus_order; ++order) {
    for (auto& m : enumerate_monoids(order)) {
      corpus.push_back(std::move(m));
    }
  }
  for (const auto& extra_path : extra) {
    corpus.push_back(parse_monoid_text(read_file(extra_path), extra_path).monoid);
  }
  const auto witness = verify_pushout(file.monoid, q, corpus);
  for (const auto& record : witness.corpus_report) {
    fmt::print("PUSHOUT {} cocones {} mediators {}\n", record.corpus_name,
               record.cocone_pairs,
               record.mediator_exists && record.mediator_unique
                   ? "unique"
                   : record.detail);
  }
  fmt::print("CHECK square-commutes {}\n",
             witness.square_commutes ? "PASS" : "FAIL");
  fmt::print("CHECK pushout {}\n", witness.pass() ? "PASS" : "FAIL");
  return witness.pass() ? kExitPass : kExitCheckFailed;
}

// --- to-monoid / to-category ----------------------------------------

int run_to_monoid(const std::string& path) {
  const auto k = parse_category_text(read_file(path), path);
  const auto embedding = category_to_monoid(k);
  const auto& mz = embedding.completed;
  const bool monoid_ok = verify_monoid(mz.monoid).ok();
  const bool zero_ok = verify_associative_zero(mz).holds;
  fmt::print("# CHECK monoid {}\n", monoid_ok ? "PASS" : "FAIL");
  fmt::print("# CHECK associative-zero {}\n", zero_ok ? "PASS" : "FAIL");
  std::vector<NamedSubset> zero_ideal{{"zero", {mz.zero}}};
  std::ostringstream out;
  print_monoid(out, mz.monoid, zero_ideal);
  fmt::print("{}", out.str());
  return monoid_ok && zero_ok ? kExitPass : kExitCheckFailed;
}

int run_to_category(const std::string& path, const std::string& ideal_name) {
  const auto file = parse_monoid_text(read_file(path), path);
  const auto q = pick_ideal(file, ideal_name, path);
  if (!is_ideal(file.monoid, q) ||
      !is_associative_ideal(file.monoid, q).holds) {
    fmt::print("CHECK associative-ideal FAIL\n");
    return kExitCheckFailed;
  }
  fmt::print("# CHECK associative-ideal PASS\n");
  const auto recovery = partial_to_category(monoid_to_partial(file.monoid, q));
  if (!recovery.ok()) {
    fmt::print("DIAGNOSIS {}\n", recovery.diagnosis);
    return kExitCheckFailed;
  }
  auto k = *recovery.category;
  k.name = file.monoid.name + ".category";
  std::ostringstream out;
  print_category(out, k);
  fmt::print("{}", out.str());
  return kExitPass;
}

// --- roundtrip ------------------------------------------------------

int roundtrip_category(const FiniteCategory& k) {
  const auto embedding = category_to_monoid(k);
  const auto partial = monoid_to_partial(embedding.completed.monoid,
                                         {embedding.completed.zero});
  const auto recovery = partial_to_category(partial);
  if (!recovery.ok()) {
    fmt::print("ROUNDTRIP {} WEAK {}\n", k.name, recovery.diagnosis);
    return kExitPass;
  }
  if (!find_category_isomorphism(*recovery.category, k).has_value()) {
    fmt::print("ROUNDTRIP {} FAIL recovered category is not isomorphic\n",
               k.name);
    return kExitCheckFailed;
  }
  const auto correspondence = build_and_verify_correspondence(
      embedding.completed.monoid, {embedding.completed.zero}, k);
  if (!correspondence.pass()) {
    for (const auto& clause : correspondence.clauses) {
      if (!clause.pass) {
        fmt::print("ROUNDTRIP {} FAIL clause {}: {}\n", k.name, clause.clause,
                   clause.detail);
        return kExitCheckFailed;
      }
    }
  }
  fmt::print("ROUNDTRIP {} OK\n", k.name);
  return kExitPass;
}

int roundtrip_monoid(const MonoidFile& file, const std::string& path) {
  const auto q = pick_ideal(file, "", path);
  const auto& m = file.monoid;
  if (!is_ideal(m, q) || !is_associative_ideal(m, q).holds) {
    fmt::print("ROUNDTRIP {} FAIL ideal is not associative\n", m.name);
    return kExitCheckFailed;
  }
  const auto recovery = partial_to_category(monoid_to_partial(m, q));
  if (!recovery.ok()) {
    fmt::print("ROUNDTRIP {} WEAK {}\n", m.name, recovery.diagnosis);
    return kExitPass;
  }
  const auto completed = category_to_monoid(*recovery.category);
  const auto quotient = quotient_to_zero(m, q);
  if (!find_isomorphism(completed.completed.monoid, quotient.quotient)
           .has_value()) {
    fmt::print("ROUNDTRIP {} FAIL re-collapse differs from the quotient\n",
               m.name);
    return kExitCheckFailed;
  }
  fmt::print("ROUNDTRIP {} OK\n", m.name);
  return kExitPass;
}

int run_roundtrip(const std::vector<std::string>& paths) {
  int exit_code = kExitPass;
  for (const auto& path : paths) {
    const std::string text = read_file(path);
    const std::string kind = first_keyword(text);
    int one = kExitPass;
    if (kind == "category") {
      one = roundtrip_category(parse_category_text(text, path));
    } else if (kind == "monoid") {
      one = roundtrip_monoid(parse_monoid_text(text, path), path);
    } else {
      throw ParseError(fmt::format("{}: expected a monoid or category file",
                                   path));
    }
    exit_code = std::max(exit_code, one);
  }
  return exit_code;
}

// --- chains ---------------------------------------------------------

int run_chains(const std::string& path, std::size_t max_len) {
  const auto rel = parse_rel_text(read_file(path), path);
  const auto report = validate_rel(rel);
  if (!report.structural.empty()) {
    std::cerr << "error: " << report.structural.front() << "\n";
    return kExitStructural;
  }
  print_report_lines(report, "rel-axioms");

  for (const auto& chain : enumerate_chains(rel, max_len)) {
    fmt::print("CHAIN {}\n", format_word(rel, chain));
  }
  fmt::print("COUNT {}\n", enumerate_chains(rel, max_len).size());

  const auto props = verify_four_properties(rel, max_len);
  const auto line = [&](const char* label, bool ok,
                        const std::optional<std::string>& witness) {
    if (ok) {
      fmt::print("CHECK {} PASS\n", label);
    } else {
      fmt::print("CHECK {} FAIL {}\n", label, witness.value_or(""));
    }
  };
  line("factor-closure", props.factor_closed, props.factor_witness);
  line("extension", props.extendable, props.extension_witness);
  line("empty-neutrality", props.empty_neutral, props.empty_witness);
  line("unit-length", props.unit_length_matches, props.unit_witness);

  const auto checks = ideal_from_rel(rel, max_len);
  line("ideal-two-sided", checks.two_sided, checks.two_sided_witness);
  line("ideal-associative", checks.associative, checks.associativity_witness);
  line("ideal-matches-ex", checks.matches_ex, checks.matches_witness);
  // Primality and weak simplicity are classifications, not laws.
  if (checks.prime) {
    fmt::print("IDEAL prime\n");
  } else {
    fmt::print("IDEAL not-prime ('{}','{}')\n",
               format_word(rel, checks.prime_witness->first),
               format_word(rel, checks.prime_witness->second));
  }
  if (checks.weakly_simple) {
    fmt::print("IDEAL weakly-simple\n");
  } else {
    fmt::print("IDEAL not-weakly-simple '{}'\n",
               format_word(rel, *checks.weak_witness));
  }

  const bool all = report.ok() && props.all() && checks.two_sided &&
                   checks.associative && checks.matches_ex;
  return all ? kExitPass : kExitCheckFailed;
}

// --- localize -------------------------------------------------------

int run_localize(const std::string& path, GuardReading reading) {
  const auto axioms = parse_axioms(read_file(path), path);
  const auto report = localize(axioms, reading);
  for (const auto& axiom : report.output) {
    fmt::print("AXIOM {}\n", print_formula(axiom));
  }
  for (const auto& warning : report.warnings) {
    fmt::print("WARN {}\n", warning);
  }
  if (g_full_trace) {
    for (const auto& step : report.trace) {
      fmt::print("TRACE {} {} {} => {}\n", step.axiom, step.kind, step.before,
                 step.after);
    }
  }
  return kExitPass;
}

// --- model-check ----------------------------------------------------

int run_model_check(const std::string& path, const std::string& ideal_name) {
  const auto file = parse_monoid_text(read_file(path), path);
  const auto q = pick_ideal(file, ideal_name, path);
  const auto& m = file.monoid;
  if (!is_ideal(m, q) || !is_associative_ideal(m, q).holds) {
    fmt::print("CHECK localized-theory FAIL ideal is not associative\n");
    return kExitCheckFailed;
  }
  const auto report = check_localized_monoid_theory(m, q);
  fmt::print("AXIOM associativity {}\n", report.associativity ? "PASS" : "FAIL");
  fmt::print("AXIOM left-unit {}\n", report.left_unit.pass ? "PASS" : "FAIL");
  fmt::print("AXIOM right-unit {}\n", report.right_unit.pass ? "PASS" : "FAIL");

  const auto tau_lines = [&](const UnitLawReport& law) {
    for (Index x = 0; x < m.size(); ++x) {
      std::string admissible;
      for (Index e : law.admissible[x]) {
        if (!admissible.empty()) {
          admissible += ',';
        }
        admissible += m.elements[e];
      }
      fmt::print("TAU {} {} -> {} {{{}}}\n", law.tau_symbol, m.elements[x],
                 law.canonical[x] == kUndefined ? "-"
                                                : m.elements[law.canonical[x]],
                 admissible);
    }
  };
  tau_lines(report.left_unit);
  tau_lines(report.right_unit);
  if (g_full_trace) {
    for (const auto& axiom : report.localized_axioms) {
      fmt::print("LOCALIZED {}\n", print_formula(axiom));
    }
  }
  fmt::print("CHECK localized-theory {}\n", report.pass() ? "PASS" : "FAIL");
  return report.pass() ? kExitPass : kExitCheckFailed;
}

// --- search ---------------------------------------------------------

int run_search(Index max_order) {
  std::size_t found = 0;
  for (Index order = 1; order <= max_order; ++order) {
    for (const auto& m : enumerate_monoids(order)) {
      for (const auto& ideal : enumerate_associative_ideals(m)) {
        if (!ideal.prime) {
          fmt::print("ASSOC_NOT_PRIME {} {}\n", m.name,
                     join_members(m, ideal.members));
          ++found;
        }
      }
    }
  }
  fmt::print("FOUND {}\n", found);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite monoids with designated ideals, finite "
               "categories, partial-sequence existence, and axiom "
               "localization"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "summary";
  app.add_option("--format", format, "Report verbosity")
      ->check(CLI::IsMember({"summary", "full-trace"}));
  std::string output_path;
  app.add_option("--output", output_path,
                 "Write the report to a file instead of standard output");

  std::string path;
  std::string ideal_name;
  std::vector<std::string> paths;
  std::vector<std::string> extra_corpus;
  Index corpus_order = 3;
  Index search_order = 3;
  std::size_t max_len = 6;

  auto* verify = app.add_subcommand("verify", "Validate a monoid or category file");
  verify->add_option("file", path)->required();

  auto* ideals = app.add_subcommand("ideals", "Enumerate associative ideals");
  ideals->add_option("file", path)->required();
  std::string unit_witness = "allow";
  ideals->add_option("--unit-witness", unit_witness,
                     "Accept units as weak-simplicity companions")
      ->check(CLI::IsMember({"allow", "forbid"}));

  auto* quotient = app.add_subcommand("quotient",
                                      "Quotient to zero and to the unit");
  quotient->add_option("file", path)->required();
  quotient->add_option("--ideal", ideal_name);

  auto* pushout = app.add_subcommand("pushout",
                                     "Check the quotient square universally");
  pushout->add_option("file", path)->required();
  pushout->add_option("--ideal", ideal_name);
  pushout->add_option("--corpus-order", corpus_order)->check(CLI::Range(1, 4));
  pushout->add_option("--corpus", extra_corpus);

  auto* to_monoid = app.add_subcommand("to-monoid",
                                       "Complete a category into a monoid");
  to_monoid->add_option("file", path)->required();

  auto* to_category = app.add_subcommand("to-category",
                                         "Recover a category from a monoid");
  to_category->add_option("file", path)->required();
  to_category->add_option("--ideal", ideal_name);

  auto* roundtrip = app.add_subcommand("roundtrip",
                                       "Translate back and forth, compare");
  roundtrip->add_option("files", paths)->required();

  auto* chains = app.add_subcommand("chains",
                                    "Enumerate chains and check the laws");
  chains->add_option("file", path)->required();
  chains->add_option("--max-len", max_len)->check(CLI::Range(1, 12));

  auto* localize_cmd = app.add_subcommand("localize", "Rewrite axioms with "
                                          "existence guards");
  localize_cmd->add_option("file", path)->required();
  std::string reading = "adjacent";
  localize_cmd->add_option("--reading", reading,
                           "Pair adjacent factors, or literally the first "
                           "factor against each later one")
      ->check(CLI::IsMember({"adjacent", "literal"}));

  auto* model_check = app.add_subcommand("model-check",
                                         "Evaluate the localized monoid "
                                         "theory on a monoid with ideal");
  model_check->add_option("file", path)->required();
  model_check->add_option("--ideal", ideal_name);

  auto* search = app.add_subcommand("search", "Scan small monoids for "
                                    "associative non-prime ideals");
  search->add_option("--order", search_order)->check(CLI::Range(1, 4));

  CLI11_PARSE(app, argc, argv);
  g_full_trace = format == "full-trace";
  if (!output_path.empty() &&
      std::freopen(output_path.c_str(), "w", stdout) == nullptr) {
    std::cerr << "error: cannot open '" << output_path << "'\n";
    return kExitStructural;
  }

  try {
    if (verify->parsed()) return run_verify(path);
    if (ideals->parsed()) return run_ideals(path, unit_witness == "allow");
    if (quotient->parsed()) return run_quotient(path, ideal_name);
    if (pushout->parsed())
      return run_pushout(path, ideal_name, corpus_order, extra_corpus);
    if (to_monoid->parsed()) return run_to_monoid(path);
    if (to_category->parsed()) return run_to_category(path, ideal_name);
    if (roundtrip->parsed()) return run_roundtrip(paths);
    if (chains->parsed()) return run_chains(path, max_len);
    if (localize_cmd->parsed())
      return run_localize(path, reading == "literal"
                                    ? GuardReading::LiteralFirst
                                    : GuardReading::AdjacentPairs);
    if (model_check->parsed()) return run_model_check(path, ideal_name);
    if (search->parsed()) return run_search(search_order);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  }
  return kExitPass;
}
