#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monocat/monoid.hpp"

namespace monocat {

// Subsets of a monoid are sets of element indices.
using Subset = std::set<Index>;

struct TripleWitness {
  Index a, b, c;
};

// One failed instance of the prime biconditional. forward means the
// product lies in the ideal while neither factor does; !forward means a
// factor lies in the ideal but the product escapes.
struct PairWitness {
  Index x, y;
  bool forward;
};

struct AssociativityCheck {
  bool holds = false;
  std::optional<TripleWitness> witness;
};

struct PrimalityCheck {
  bool holds = false;
  std::optional<PairWitness> witness;
};

// Two-sided absorption. Throws StructuralError when q is empty or
// contains the unit; such subsets are degenerate rather than non-ideals.
bool is_ideal(const FiniteMonoid& m, const Subset& q);

// The triple condition over all non-unit a, b, c: a product of three
// landing in q forces one of the two inner products into q. Elements of
// q themselves are quantified over.
AssociativityCheck is_associative_ideal(const FiniteMonoid& m, const Subset& q);

// Both directions of: xy in q iff x in q or y in q, over all pairs.
PrimalityCheck is_prime_ideal(const FiniteMonoid& m, const Subset& q);

// Smallest two-sided ideal containing seed, by fixpoint closure under
// left and right multiplication. Throws when the closure reaches the
// unit (the seed generates the whole monoid).
Subset generated_ideal(const FiniteMonoid& m, const Subset& seed);

struct ClassifiedIdeal {
  Subset members;
  bool prime = false;
};

inline constexpr Index kMaxIdealScanOrder = 6;

// Power-set scan for associative ideals, each flagged prime or not.
// Listed in ascending bitmask order of the member sets.
std::vector<ClassifiedIdeal> enumerate_associative_ideals(
    const FiniteMonoid& m, Index order_cap = kMaxIdealScanOrder);

// Quotient that identifies all of q with a single absorbing element.
// The structure of elements outside q is untouched.
struct QuotientResult {
  FiniteMonoid quotient;
  Index zero = 0;
  MonoidHom projection;
};

// Requires q to be an associative ideal; refused with the witness
// triple otherwise. The resulting {zero} is again an associative ideal.
QuotientResult quotient_to_zero(const FiniteMonoid& m, const Subset& q);

// Congruence closure of identifying all of q with the unit. For any
// two-sided ideal this collapses the whole monoid to one element.
FiniteMonoid quotient_to_unit(const FiniteMonoid& m, const Subset& q);

// ---------------------------------------------------------------------
// Universal property of the quotient square
//
//     {E} u Q ----inclusion----> M
//        |                       |
//     collapse               projection
//        |                       |
//     {E, 0} -----induced----> M / Q
//
// verify_pushout checks, against every corpus monoid X, that each
// commuting cocone (hom from M, hom from {E,0}) factors through the
// quotient by exactly one mediating hom.

struct CoconeRecord {
  std::string corpus_name;
  std::size_t cocone_pairs = 0;
  bool mediator_exists = true;
  bool mediator_unique = true;
  std::string detail;  // first counterexample, when any
};

struct PushoutWitness {
  FiniteMonoid corner;       // {E} u Q as a monoid
  FiniteMonoid two_element;  // {E, 0}
  MonoidHom inclusion;       // corner -> m
  MonoidHom collapse;        // corner -> two_element
  QuotientResult apex;
  MonoidHom induced;         // two_element -> apex.quotient
  bool square_commutes = false;
  std::vector<CoconeRecord> corpus_report;

  bool pass() const;
};

PushoutWitness verify_pushout(const FiniteMonoid& m, const Subset& q,
                              const std::vector<FiniteMonoid>& corpus);

struct WeakSimplicityCheck {
  bool holds = false;
  std::optional<Index> failing;
};

// Every element outside q must admit right and left companions outside
// q whose products stay outside q. With allow_unit_witness off, the
// unit and all detected local units are excluded as companions.
WeakSimplicityCheck weak_simplicity_check(const FiniteMonoid& m, const Subset& q,
                                          bool allow_unit_witness);

}  // namespace monocat
