#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monocat/ideal.hpp"
#include "monocat/monoid.hpp"

namespace monocat {

// First-order terms: variables, constants (identifiers of the shape
// e0, e1, ...), and function applications.
struct Term {
  enum class Kind { Variable, Constant, Apply };
  Kind kind = Kind::Variable;
  std::string name;
  std::vector<Term> args;

  bool operator==(const Term&) const = default;
};

// Closed first-order formulas over predicates, built-in equality, and
// the usual connectives and quantifiers.
struct Formula {
  enum class Kind { Forall, Exists, Not, And, Or, Implies, Iff, Atom, Equal };
  Kind kind = Kind::Atom;
  std::string name;  // quantified variable or predicate name
  std::vector<Formula> children;
  std::vector<Term> args;  // Atom and Equal only

  bool operator==(const Formula&) const = default;
};

// Grammar, one axiom per line ('#' starts a comment):
//   formula := ('forall'|'exists') var '.' formula | binary expression
//   infix   := 'iff' < 'implies' (right assoc) < 'or' < 'and'
//   unary   := 'not' unary | '(' formula ')' | atom
//   atom    := name '(' term {',' term} ')'      eq has arity two
//   term    := name [ '(' term {',' term} ')' ]
// Quantifiers used as operands must be parenthesized. Formulas must be
// closed; arities must be consistent across the whole axiom list.
std::vector<Formula> parse_axioms(const std::string& text,
                                  const std::string& filename = "");

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

struct RewriteStep {
  std::size_t axiom = 0;
  std::string kind;  // "guard" or "constant"
  std::string before;
  std::string after;
};

struct LocalizationReport {
  std::vector<Formula> input;
  std::vector<Formula> output;
  std::vector<RewriteStep> trace;
  std::vector<std::string> warnings;
};

// Which pairs of a factor sequence the existence guards range over:
// consecutive factors, or the first factor against each later one.
// Adjacent pairs are the default; the literal reading exists for
// comparison only.
enum class GuardReading { AdjacentPairs, LiteralFirst };

// Rewrites axioms for partial existence. Constants adjacent to a
// variable become fresh unary terms (tau1_<c> after a variable,
// tau2_<c> before one); every user atom is then guarded by the
// conjunction of ex over the factor pairs of its argument sequences,
// with applications of two or more arguments flattened as products.
// Guards already provided by an enclosing premise are not repeated, so
// the rewrite is idempotent. An axiom whose constants cannot be
// localized is passed through unchanged with a warning.
LocalizationReport localize(const std::vector<Formula>& axioms,
                            GuardReading reading = GuardReading::AdjacentPairs);

// Finite structure keyed by symbol name and arity, so a predicate may
// carry several arities (the existence predicate is both unary and
// binary when built from a monoid).
struct PredicateTable {
  std::size_t arity = 0;
  std::vector<bool> values;  // row-major over domain^arity
};
struct FunctionTable {
  std::size_t arity = 0;
  std::vector<Index> values;
};

struct FiniteStructure {
  std::vector<std::string> domain;
  std::map<std::pair<std::string, std::size_t>, PredicateTable> predicates;
  std::map<std::pair<std::string, std::size_t>, FunctionTable> functions;
  std::map<std::string, Index> constants;

  std::size_t offset(const std::vector<Index>& tuple) const;
  void set_predicate(const std::string& name, const std::vector<Index>& tuple,
                     bool value);
  bool predicate(const std::string& name, const std::vector<Index>& tuple) const;
};

// Classical truth by exhaustive quantifier expansion. Throws
// StructuralError naming any uninterpreted symbol.
bool evaluate(const Formula& f, const FiniteStructure& s);

// Domain = the monoid, op = its table, binary ex(u,v) = "uv escapes q",
// unary ex(x) = "x escapes q".
FiniteStructure structure_from_monoid_ideal(const FiniteMonoid& m,
                                            const Subset& q);

// The worked axiom set: associativity and the two unit laws.
const std::string& monoid_axioms_text();

struct UnitLawReport {
  std::string tau_symbol;
  bool pass = false;
  // One admissible interpretation per element, preferring a local unit
  // other than the global one; kUndefined where the guard is void.
  std::vector<Index> canonical;
  // All local units serving each element with an existing product.
  std::vector<std::set<Index>> admissible;
};

struct TheoryReport {
  bool associativity = false;
  UnitLawReport left_unit;   // unit acting from the left, tau2_e0
  UnitLawReport right_unit;  // unit acting from the right, tau1_e0
  std::vector<Formula> localized_axioms;

  bool pass() const {
    return associativity && left_unit.pass && right_unit.pass;
  }
};

// Localizes the monoid axioms and evaluates them on the structure built
// from (m, q), searching the unit-term interpretations over local
// units. All admissible interpretations are reported, none is singled
// out beyond the canonical table used for evaluation.
TheoryReport check_localized_monoid_theory(const FiniteMonoid& m,
                                           const Subset& q);

}  // namespace monocat
