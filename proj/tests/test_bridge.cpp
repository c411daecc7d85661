#include "monocat/bridge.hpp"

#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "monocat/errors.hpp"

namespace monocat {
namespace {

MonoidWithZero k2_monoid() {
  return category_to_monoid(corpus::k2()).completed;
}

TEST_SUITE("bridge") {

TEST_CASE("local units of the completed K2 are the unit and the identities") {
  const auto mz = k2_monoid();
  CHECK(local_units(mz.monoid, {mz.zero}) == Subset{0, 1, 2});
}

TEST_CASE("M3 and M4 have no local unit besides the global one") {
  CHECK(local_units(corpus::m3(), {2}) == Subset{0});
  CHECK(local_units(corpus::m4(), {2, 3}) == Subset{0});
}

TEST_CASE("unit coverage distinguishes the two readings") {
  const auto mz = k2_monoid();
  CHECK(check_unit_coverage(mz.monoid, {mz.zero}).holds);

  const auto m3 = corpus::m3();
  const auto strict = check_unit_coverage(m3, {2});
  CHECK_FALSE(strict.holds);
  CHECK(strict.uncovered == Index{1});
  CHECK(check_unit_coverage(m3, {2}, true).holds);
}

TEST_CASE("adjoining a local unit") {
  const auto m3 = corpus::m3();
  const auto ext = adjoin_local_unit(m3, {2});
  const auto& big = ext.monoid;
  REQUIRE(big.size() == 4);
  CHECK(ext.fresh_unit == 3);
  CHECK(big.unit == ext.fresh_unit);
  CHECK(verify_monoid(big).ok());

  // The fresh element acts identically on everything.
  for (Index i = 0; i < big.size(); ++i) {
    CHECK(big.mul(ext.fresh_unit, i) == i);
    CHECK(big.mul(i, ext.fresh_unit) == i);
  }
  CHECK(is_local_unit(big, ext.ideal, ext.fresh_unit));

  // The old elements embed with their products unchanged, and the old
  // unit survives as a local unit.
  for (Index i = 0; i < m3.size(); ++i) {
    for (Index j = 0; j < m3.size(); ++j) {
      CHECK(big.mul(i, j) == m3.mul(i, j));
    }
  }
  CHECK(local_units(big, ext.ideal) == Subset{0, 3});
}

TEST_CASE("adjoining twice keeps both fresh units local") {
  // Over a prime ideal the extension stays inside the axioms, so it
  // can be repeated; both fresh elements satisfy the local-unit law.
  const auto once = adjoin_local_unit(corpus::m3(), {1, 2});
  const auto twice = adjoin_local_unit(once.monoid, once.ideal);
  CHECK(twice.monoid.size() == 5);
  CHECK(is_local_unit(twice.monoid, twice.ideal, 3));
  CHECK(is_local_unit(twice.monoid, twice.ideal, 4));
}

TEST_CASE("a non-prime ideal leaves the axioms after the extension") {
  // The demoted unit serves a from both sides while a*a falls into the
  // ideal, so the triple (a, E, a) breaks the associativity condition.
  // The extension is honest about it rather than hiding products.
  const auto ext = adjoin_local_unit(corpus::m3(), {2});
  const auto check = is_associative_ideal(ext.monoid, ext.ideal);
  CHECK_FALSE(check.holds);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->a == 1);
  CHECK(check.witness->b == 0);
  CHECK(check.witness->c == 1);
  CHECK_THROWS_AS(adjoin_local_unit(ext.monoid, ext.ideal), StructuralError);
}

TEST_CASE("the trivial monoid admits no ideal to extend along") {
  FiniteMonoid trivial;
  trivial.elements = {"E"};
  trivial.table = {{0}};
  CHECK_THROWS_AS(adjoin_local_unit(trivial, {0}), StructuralError);
  CHECK_THROWS_AS(adjoin_local_unit(trivial, {}), StructuralError);
}

TEST_CASE("the partial structure of the completed K2") {
  const auto mz = k2_monoid();
  const auto partial = monoid_to_partial(mz.monoid, {mz.zero});
  CHECK(partial.carrier == std::vector<std::string>{"idA", "idB", "f"});
  std::size_t defined_pairs = 0;
  for (Index a = 0; a < partial.size(); ++a) {
    for (Index b = 0; b < partial.size(); ++b) {
      defined_pairs += partial.defined(a, b);
    }
  }
  CHECK(defined_pairs == 4);
  CHECK(partial.defined(0, 0));  // idA * idA
  CHECK(partial.defined(1, 1));  // idB * idB
  CHECK(partial.defined(0, 2));  // idA * f
  CHECK(partial.defined(2, 1));  // f * idB
  CHECK(partial.local_units == std::set<Index>{0, 1});
}

TEST_CASE("stripping M3 and M4 leaves a bare carrier") {
  for (const auto& [m, q] :
       {std::pair<FiniteMonoid, Subset>{corpus::m3(), {2}},
        std::pair<FiniteMonoid, Subset>{corpus::m4(), {2, 3}}}) {
    CAPTURE(m.name);
    const auto partial = monoid_to_partial(m, q);
    CHECK(partial.carrier == std::vector<std::string>{"a"});
    CHECK_FALSE(partial.defined(0, 0));
    CHECK(partial.local_units.empty());
  }
}

TEST_CASE("carrier local units agree with the monoid-side ones") {
  for (const auto& [m, q] : corpus::monoid_ideal_corpus()) {
    CAPTURE(m.name);
    const auto partial = monoid_to_partial(m, q);
    const auto units = local_units(m, q);
    std::set<std::string> from_monoid;
    for (Index e : units) {
      if (e != m.unit) {
        from_monoid.insert(m.elements[e]);
      }
    }
    std::set<std::string> from_carrier;
    for (Index e : partial.local_units) {
      from_carrier.insert(partial.carrier[e]);
    }
    CHECK(from_carrier == from_monoid);
  }
}

TEST_CASE("monoid_to_partial refuses bad inputs with a witness") {
  try {
    monoid_to_partial(corpus::m4(), {3});
    FAIL("expected a StructuralError");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("witness triple") != std::string::npos);
  }
  try {
    monoid_to_partial(corpus::involution_with_zero(), {2});
    FAIL("expected a StructuralError");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("global unit") != std::string::npos);
  }
}

TEST_CASE("verify_partial_structure catches tampering") {
  const auto mz = k2_monoid();
  auto partial = monoid_to_partial(mz.monoid, {mz.zero});
  CHECK(verify_partial_structure(partial).ok());

  auto broken = partial;
  broken.product[0][2] = 1;  // idA * f = idB breaks the local-unit law
  CHECK_FALSE(verify_partial_structure(broken).ok());

  auto vacuous = partial;
  vacuous.local_units.insert(2);  // f is no unit
  CHECK_FALSE(verify_partial_structure(vacuous).ok());
}

TEST_CASE("ideal associativity matches weak associativity both ways") {
  for (const auto& [m, q] : corpus::monoid_ideal_corpus()) {
    CAPTURE(m.name);
    // Forward: the ideal condition, quantified over carrier triples.
    const auto partial = monoid_to_partial(m, q);
    std::vector<Index> carrier;
    for (Index i = 0; i < m.size(); ++i) {
      if (i != m.unit && !q.count(i)) {
        carrier.push_back(i);
      }
    }
    for (Index a : carrier) {
      for (Index b : carrier) {
        for (Index c : carrier) {
          const bool abc_gone = q.count(m.mul(m.mul(a, b), c)) > 0;
          const bool ab_gone = q.count(m.mul(a, b)) > 0;
          const bool bc_gone = q.count(m.mul(b, c)) > 0;
          if (abc_gone) {
            CHECK((ab_gone || bc_gone));
          }
          // Contrapositive, the partial-product reading.
          if (!ab_gone && !bc_gone) {
            CHECK_FALSE(abc_gone);
          }
        }
      }
    }
    CHECK(verify_partial_structure(partial).ok());
  }
}

TEST_CASE("recovering a category from the completed K2") {
  const auto mz = k2_monoid();
  const auto partial = monoid_to_partial(mz.monoid, {mz.zero});
  const auto recovery = partial_to_category(partial);
  REQUIRE(recovery.ok());
  CHECK(find_category_isomorphism(*recovery.category, corpus::k2()).has_value());
}

TEST_CASE("M3 is diagnosed: no local unit serves a") {
  const auto partial = monoid_to_partial(corpus::m3(), {2});
  const auto recovery = partial_to_category(partial);
  CHECK_FALSE(recovery.ok());
  CHECK(recovery.diagnosis.find("'a' has no left local unit") !=
        std::string::npos);
}

TEST_CASE("after adjoining a unit the diagnosis names the broken triple") {
  const auto ext = adjoin_local_unit(corpus::m3(), {2});
  try {
    monoid_to_partial(ext.monoid, ext.ideal);
    FAIL("expected a StructuralError");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("(a,E,a)") != std::string::npos);
  }
}

TEST_CASE("round trip A: every corpus category returns isomorphic") {
  for (const auto& k : corpus::category_corpus()) {
    CAPTURE(k.name);
    const auto embedding = category_to_monoid(k);
    const auto partial = monoid_to_partial(embedding.completed.monoid,
                                           {embedding.completed.zero});
    const auto recovery = partial_to_category(partial);
    REQUIRE(recovery.ok());
    CHECK(find_category_isomorphism(*recovery.category, k).has_value());
  }
}

TEST_CASE("round trip B: recovered categories re-collapse to the quotient") {
  auto instances = corpus::monoid_ideal_corpus();
  const auto mz = k2_monoid();
  instances.emplace_back(mz.monoid, Subset{mz.zero});
  for (const auto& [m, q] : instances) {
    CAPTURE(m.name);
    const auto recovery = partial_to_category(monoid_to_partial(m, q));
    if (recovery.ok()) {
      const auto completed = category_to_monoid(*recovery.category);
      const auto quotient = quotient_to_zero(m, q);
      CHECK(find_isomorphism(completed.completed.monoid, quotient.quotient)
                .has_value());
    } else {
      CHECK_FALSE(recovery.diagnosis.empty());
      const auto ext = adjoin_local_unit(m, q);
      std::string retry_diagnosis;
      try {
        retry_diagnosis =
            partial_to_category(monoid_to_partial(ext.monoid, ext.ideal))
                .diagnosis;
      } catch (const StructuralError& e) {
        retry_diagnosis = e.what();
      }
      CHECK(retry_diagnosis != recovery.diagnosis);
      CHECK_FALSE(retry_diagnosis.empty());
    }
  }
}

TEST_CASE("the carrier map is one-to-one but not a category iso") {
  // The identity on the carrier preserves every defined product by
  // construction; the M3 carrier still fails to be a category.
  const auto partial = monoid_to_partial(corpus::m3(), {2});
  CHECK(verify_partial_structure(partial).ok());
  CHECK_FALSE(partial_to_category(partial).ok());
}

TEST_CASE("correspondence clauses pass for the completed K2") {
  const auto mz = k2_monoid();
  const auto report =
      build_and_verify_correspondence(mz.monoid, {mz.zero}, corpus::k2());
  for (const auto& clause : report.clauses) {
    CAPTURE(clause.clause);
    CAPTURE(clause.detail);
    CHECK(clause.pass);
  }
  CHECK(report.pass());
}

TEST_CASE("correspondence fails against a category of the wrong size") {
  const auto report = build_and_verify_correspondence(corpus::m3(), {2},
                                                      corpus::empty_category());
  CHECK_FALSE(report.pass());
  bool bijection_failed = false;
  for (const auto& clause : report.clauses) {
    if (clause.clause == "arrow-bijection") {
      bijection_failed = !clause.pass;
    }
  }
  CHECK(bijection_failed);
}

TEST_CASE("correspondence is vacuously fine on the empty category") {
  const auto embedding = category_to_monoid(corpus::empty_category());
  const auto report = build_and_verify_correspondence(
      embedding.completed.monoid, {embedding.completed.zero},
      corpus::empty_category());
  CHECK(report.pass());
}

TEST_CASE("correspondence passes on every corpus category") {
  for (const auto& k : corpus::category_corpus()) {
    CAPTURE(k.name);
    const auto embedding = category_to_monoid(k);
    const auto report = build_and_verify_correspondence(
        embedding.completed.monoid, {embedding.completed.zero}, k);
    CHECK(report.pass());
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace monocat
