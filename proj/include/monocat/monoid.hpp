#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monocat {

using Index = std::size_t;

// Sentinel for "no value" in partial tables.
inline constexpr Index kUndefined = static_cast<Index>(-1);

// Finite monoid given by element names and a total multiplication table.
// table[i][j] is the index of (element i) * (element j). Nothing is
// validated on construction; verify_monoid reports violations.
struct FiniteMonoid {
  std::string name;
  std::vector<std::string> elements;
  Index unit = 0;
  std::vector<std::vector<Index>> table;

  Index size() const { return elements.size(); }
  Index mul(Index i, Index j) const { return table[i][j]; }
  std::optional<Index> index_of(const std::string& element) const;
};

// Map between monoids, stored as the image of each source element.
struct MonoidHom {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<Index> map;

  Index apply(Index i) const { return map[i]; }
};

// Word over a monoid's elements; the empty word stands for the unit.
using Word = std::vector<Index>;

// Structural problems are distinct from axiom violations: a report with
// structural entries describes data that is not even a candidate table.
struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<std::string> violations;

  bool ok() const { return structural.empty() && violations.empty(); }
};

// Checks unit laws and associativity of every triple; lists each failure.
ValidationReport verify_monoid(const FiniteMonoid& candidate);

// Left fold of the table over w; the empty word yields the unit.
Index product(const FiniteMonoid& m, const Word& w);

// Checks unit preservation and multiplicativity; reports the first
// failing pair.
ValidationReport check_hom(const MonoidHom& hom);

inline constexpr Index kMaxEnumerationOrder = 4;

// All monoids of the given order, one per isomorphism class. Class
// representatives are the lexicographically minimal tables over
// unit-fixing relabelings, listed in table order, so output is
// deterministic. Orders above kMaxEnumerationOrder are refused.
std::vector<FiniteMonoid> enumerate_monoids(Index order);

// Unit- and table-preserving bijection from m onto n, if one exists.
// Searches the permutations fixing the unit, in lexicographic order.
std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& m,
                                                   const FiniteMonoid& n);

// Every homomorphism m -> x, found by exhaustive search over all
// |x|^|m| maps with the unit image pinned. Desk scale only.
std::vector<std::vector<Index>> all_homs(const FiniteMonoid& m,
                                         const FiniteMonoid& x);

// ---------------------------------------------------------------------
// Text format
//
//   monoid <name>
//   elements <e1> <e2> ...
//   unit <e>
//   <n rows of n element names; row i holds the products i * j>
//   ideal <name> <e1> <e2> ...        (zero or more)
//
// '#' starts a comment. Unknown element names are errors.

struct NamedSubset {
  std::string name;
  std::vector<Index> members;
};

struct MonoidFile {
  FiniteMonoid monoid;
  std::vector<NamedSubset> ideals;

  const NamedSubset* find_ideal(const std::string& ideal_name) const;
};

MonoidFile parse_monoid_file(std::istream& in, const std::string& filename = "");
MonoidFile parse_monoid_text(const std::string& text, const std::string& filename = "");
void print_monoid(std::ostream& out, const FiniteMonoid& m,
                  const std::vector<NamedSubset>& ideals = {});

}  // namespace monocat
