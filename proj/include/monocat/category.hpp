#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monocat/ideal.hpp"
#include "monocat/monoid.hpp"

namespace monocat {

struct Arrow {
  std::string name;
  Index dom = 0;
  Index cod = 0;
};

// Finite category with composition in diagrammatic order: compose(f, g)
// means "f then g" and is defined exactly when cod(f) == dom(g).
// Identity arrows are stored explicitly so that "objects are single
// arrows" is checkable rather than a convention.
struct FiniteCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::vector<Index>> composition;  // kUndefined where absent
  std::vector<Index> identities;                // object -> arrow

  Index compose(Index f, Index g) const { return composition[f][g]; }
  bool is_identity(Index arrow) const;
};

// Checks well-formedness, the definedness pattern of composition,
// identity laws, and associativity of all composable triples.
ValidationReport verify_category(const FiniteCategory& k);

// Monoid whose designated element forms a singleton associative ideal.
struct MonoidWithZero {
  FiniteMonoid monoid;
  Index zero = 0;
};

struct CategoryEmbedding {
  MonoidWithZero completed;
  std::vector<Index> arrow_to_element;
};

// Completes a category into a total monoid: a fresh unit acting
// identically, a fresh absorbing element, and every non-composable
// arrow pair sent to the absorbing element. The arrow map is injective
// and preserves defined composites.
CategoryEmbedding category_to_monoid(const FiniteCategory& k);

struct ZeroCheck {
  bool holds = false;
  std::optional<TripleWitness> witness;
  std::string detail;
};

// The zero must absorb, and any triple product of non-unit elements
// equal to zero must already have an inner pair equal to zero.
ZeroCheck verify_associative_zero(const MonoidWithZero& mz);

// Exhaustive structural isomorphism search: object and arrow bijections
// preserving identities, incidence, and composition.
struct CategoryIso {
  std::vector<Index> object_map;
  std::vector<Index> arrow_map;
};
std::optional<CategoryIso> find_category_isomorphism(const FiniteCategory& k1,
                                                     const FiniteCategory& k2);

// ---------------------------------------------------------------------
// Text format
//
//   category <name>
//   order diagrammatic          (mandatory; the only accepted order)
//   objects <A> <B> ...
//   identity <arrow> <object>   (exactly one per object)
//   arrow <f> <dom> <cod>       (non-identity arrows)
//   compose <f> <g> = <h>       (non-identity composites; identity
//                                composites are inferred)
//
// '#' starts a comment.

FiniteCategory parse_category_file(std::istream& in, const std::string& filename = "");
FiniteCategory parse_category_text(const std::string& text,
                                   const std::string& filename = "");
void print_category(std::ostream& out, const FiniteCategory& k);

}  // namespace monocat
