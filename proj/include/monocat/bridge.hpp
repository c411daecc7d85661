#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monocat/category.hpp"
#include "monocat/ideal.hpp"
#include "monocat/monoid.hpp"

namespace monocat {

// An element e is a local unit for (m, q) when it acts as a two-sided
// identity wherever its products escape q, and it has at least one such
// product with a non-unit element. The quantifier ranges over non-unit
// elements: the global unit absorbs every candidate otherwise, and the
// vacuity clause keeps elements with no surviving products (members of
// q among them) out of the set. The global unit always qualifies.
bool is_local_unit(const FiniteMonoid& m, const Subset& q, Index e);
Subset local_units(const FiniteMonoid& m, const Subset& q);

struct CoverageCheck {
  bool holds = false;
  std::optional<Index> uncovered;
};

// Every element outside q needs local units whose left and right
// products with it escape q. By default the global unit is excluded
// both as a subject and as a provider, mirroring the carrier below;
// include_global_unit restores the permissive reading.
CoverageCheck check_unit_coverage(const FiniteMonoid& m, const Subset& q,
                                  bool include_global_unit = false);

struct ExtendedMonoid {
  FiniteMonoid monoid;
  Index fresh_unit = 0;  // also the designated unit of the extension
  Subset ideal;          // q, unchanged (old indices stay valid)
};

// Adjoins one fresh element acting as a two-sided identity on
// everything. The fresh element becomes the designated unit; the old
// unit stays behind as a local unit. The original elements embed with
// their products unchanged.
ExtendedMonoid adjoin_local_unit(const FiniteMonoid& m, const Subset& q);

// Carrier with a partial product: what remains of a monoid once the
// unit and the ideal are stripped and products landing in the ideal
// are declared nonexistent.
struct PartialCompositionStructure {
  std::vector<std::string> carrier;
  std::vector<std::vector<Index>> product;  // kUndefined = does not exist
  std::set<Index> local_units;

  Index size() const { return carrier.size(); }
  bool defined(Index a, Index b) const { return product[a][b] != kUndefined; }
};

// Internal invariants: weak associativity of the partial product and
// the local-unit property of the marked elements.
ValidationReport verify_partial_structure(const PartialCompositionStructure& p);

// Requires q associative; also refuses monoids where a product of two
// carrier elements equals the global unit, since such a product has no
// home in the carrier.
PartialCompositionStructure monoid_to_partial(const FiniteMonoid& m,
                                              const Subset& q);

struct CategoryRecovery {
  std::optional<FiniteCategory> category;
  std::string diagnosis;  // empty exactly when category is set

  bool ok() const { return category.has_value(); }
};

// Rebuilds a category from a partial structure: local units become
// objects, every carrier element an arrow whose endpoints are its
// unique left and right local units. Failure (no unit, several units,
// or a category axiom breaking) is a diagnosed outcome, not an error;
// the structure is then only a weak category.
CategoryRecovery partial_to_category(const PartialCompositionStructure& p);

// ---------------------------------------------------------------------
// The correspondence relation between a monoid with ideal and a
// category built from it (or vice versa): the unit pairs with the
// category's adjoined big unit, the whole ideal with one element, and
// the remaining elements biject with the arrows by name.

struct CorrespondenceR {
  // Category-side universe: arrow indices, then big_unit, then sink.
  Index big_unit = 0;
  Index sink = 0;
  std::vector<std::pair<Index, Index>> pairs;  // (monoid element, category side)
};

struct ClauseReport {
  std::string clause;
  bool pass = false;
  std::string detail;
};

struct CorrespondenceReport {
  CorrespondenceR relation;
  std::vector<ClauseReport> clauses;

  bool pass() const;
};

CorrespondenceReport build_and_verify_correspondence(const FiniteMonoid& m,
                                                     const Subset& q,
                                                     const FiniteCategory& k);

}  // namespace monocat
