#include "monocat/ideal.hpp"

#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "monocat/errors.hpp"

namespace monocat {
namespace {

FiniteMonoid trivial_monoid() {
  FiniteMonoid m;
  m.name = "T";
  m.elements = {"E"};
  m.table = {{0}};
  return m;
}

TEST_SUITE("ideal") {

TEST_CASE("absorption distinguishes ideals from plain subsets") {
  const auto m = corpus::m3();
  CHECK(is_ideal(m, {2}));
  CHECK(is_ideal(m, {1, 2}));
  CHECK_FALSE(is_ideal(m, {1}));  // a*a = 0 escapes {a}
  CHECK_THROWS_AS(is_ideal(m, {0}), StructuralError);  // contains the unit
  CHECK_THROWS_AS(is_ideal(m, {}), StructuralError);
}

TEST_CASE("the zero of M3 is an associative ideal") {
  // Brute-force cross-check: every triple over non-unit elements.
  const auto m = corpus::m3();
  const Subset q{2};
  for (Index a : {1, 2}) {
    for (Index b : {1, 2}) {
      for (Index c : {1, 2}) {
        const Index abc = m.mul(m.mul(a, b), c);
        if (q.count(abc)) {
          CHECK((q.count(m.mul(a, b)) || q.count(m.mul(b, c))));
        }
      }
    }
  }
  CHECK(is_associative_ideal(m, q).holds);
}

TEST_CASE("the big ideal of M4 is associative") {
  CHECK(is_associative_ideal(corpus::m4(), {2, 3}).holds);
}

TEST_CASE("a non-associative ideal is caught with a witness") {
  // In M4, {q2} absorbs but a*a*a = q2 while a*a = q1 stays outside.
  const auto m = corpus::m4();
  REQUIRE(is_ideal(m, {3}));
  const auto check = is_associative_ideal(m, {3});
  CHECK_FALSE(check.holds);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->a == 1);
  CHECK(check.witness->b == 1);
  CHECK(check.witness->c == 1);
}

TEST_CASE("primality of the corpus ideals") {
  const auto m = corpus::m3();
  const auto not_prime = is_prime_ideal(m, {2});
  CHECK_FALSE(not_prime.holds);
  REQUIRE(not_prime.witness.has_value());
  CHECK(not_prime.witness->x == 1);
  CHECK(not_prime.witness->y == 1);
  CHECK(not_prime.witness->forward);  // a*a lies in the ideal, a does not

  CHECK(is_prime_ideal(m, {1, 2}).holds);
  CHECK_FALSE(is_prime_ideal(corpus::m4(), {2, 3}).holds);
}

TEST_CASE("generated ideals close under multiplication") {
  const auto m = corpus::m3();
  CHECK(generated_ideal(m, {1}) == Subset{1, 2});
  CHECK(generated_ideal(m, {2}) == Subset{2});
  CHECK_THROWS_AS(generated_ideal(corpus::cyclic_two(), {1}), StructuralError);
}

TEST_CASE("enumerating associative ideals classifies them") {
  const auto found = enumerate_associative_ideals(corpus::m3());
  REQUIRE(found.size() == 2);
  CHECK(found[0].members == Subset{2});
  CHECK_FALSE(found[0].prime);
  CHECK(found[1].members == Subset{1, 2});
  CHECK(found[1].prime);

  CHECK(enumerate_associative_ideals(trivial_monoid()).empty());

  const auto idem = enumerate_associative_ideals(corpus::idempotent_two());
  REQUIRE(idem.size() == 1);
  CHECK(idem[0].members == Subset{1});

  // M4 also carries the prime ideal of all non-unit elements.
  const auto m4 = enumerate_associative_ideals(corpus::m4());
  REQUIRE(m4.size() == 2);
  CHECK(m4[0].members == Subset{2, 3});
  CHECK_FALSE(m4[0].prime);
  CHECK(m4[1].members == Subset{1, 2, 3});
  CHECK(m4[1].prime);
}

TEST_CASE("the ideal scan refuses large monoids") {
  FiniteMonoid c7;
  c7.name = "C7";
  for (int i = 0; i < 7; ++i) {
    c7.elements.push_back("g" + std::to_string(i));
  }
  c7.table.assign(7, std::vector<Index>(7));
  for (Index i = 0; i < 7; ++i) {
    for (Index j = 0; j < 7; ++j) {
      c7.table[i][j] = (i + j) % 7;
    }
  }
  REQUIRE(verify_monoid(c7).ok());
  CHECK_THROWS_AS(enumerate_associative_ideals(c7), StructuralError);
}

TEST_CASE("quotient to zero collapses M4 onto M3") {
  const auto result = quotient_to_zero(corpus::m4(), {2, 3});
  CHECK(result.quotient.size() == 3);
  CHECK(find_isomorphism(result.quotient, corpus::m3()).has_value());
}

TEST_CASE("quotient by a singleton is the identity construction") {
  const auto result = quotient_to_zero(corpus::m3(), {2});
  CHECK(result.quotient.elements == corpus::m3().elements);
  CHECK(result.quotient.table == corpus::m3().table);
  CHECK(result.zero == 2);
}

TEST_CASE("quotient by everything leaves the two-element monoid") {
  const auto result = quotient_to_zero(corpus::m3(), {1, 2});
  CHECK(result.quotient.size() == 2);
  CHECK(find_isomorphism(result.quotient, corpus::two_with_zero()).has_value());
}

TEST_CASE("quotient refuses a non-associative ideal, naming the triple") {
  try {
    quotient_to_zero(corpus::m4(), {3});
    FAIL("expected a StructuralError");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("(a,a,a)") != std::string::npos);
  }
}

TEST_CASE("quotient invariants hold across the corpus") {
  for (const auto& [m, q] : corpus::monoid_ideal_corpus()) {
    CAPTURE(m.name);
    const auto result = quotient_to_zero(m, q);
    CHECK(check_hom(result.projection).ok());

    std::vector<bool> hit(result.quotient.size(), false);
    for (Index i = 0; i < m.size(); ++i) {
      hit[result.projection.apply(i)] = true;
      CHECK((result.projection.apply(i) == result.zero) == (q.count(i) > 0));
    }
    for (bool h : hit) {
      CHECK(h);  // surjective
    }
    for (Index i = 0; i < m.size(); ++i) {
      for (Index j = i + 1; j < m.size(); ++j) {
        if (!q.count(i) && !q.count(j)) {
          CHECK(result.projection.apply(i) != result.projection.apply(j));
        }
      }
    }
    CHECK(is_associative_ideal(result.quotient, {result.zero}).holds);

    // Idempotence up to isomorphism.
    const auto again = quotient_to_zero(result.quotient, {result.zero});
    CHECK(find_isomorphism(again.quotient, result.quotient).has_value());
  }
}

TEST_CASE("identifying an ideal with the unit collapses everything") {
  for (const auto& [m, q] : corpus::monoid_ideal_corpus()) {
    CAPTURE(m.name);
    const auto collapsed = quotient_to_unit(m, q);
    CHECK(collapsed.size() == 1);
    CHECK(verify_monoid(collapsed).ok());
  }
}

TEST_CASE("pushout verification passes on the corpus instances") {
  std::vector<FiniteMonoid> corpus;
  for (Index order = 1; order <= 3; ++order) {
    for (const auto& m : enumerate_monoids(order)) {
      corpus.push_back(m);
    }
  }
  for (const auto& [m, q] :
       {std::pair<FiniteMonoid, Subset>{corpus::m3(), {2}},
        std::pair<FiniteMonoid, Subset>{corpus::m4(), {2, 3}},
        std::pair<FiniteMonoid, Subset>{corpus::m3(), {1, 2}}}) {
    CAPTURE(m.name);
    const auto witness = verify_pushout(m, q, corpus);
    CHECK(witness.square_commutes);
    CHECK(witness.pass());
    CHECK(check_hom(witness.inclusion).ok());
    CHECK(check_hom(witness.collapse).ok());
    CHECK(check_hom(witness.induced).ok());
    CHECK(verify_monoid(witness.corner).ok());
  }
}

TEST_CASE("pushout verification passes across the whole corpus") {
  std::vector<FiniteMonoid> corpus;
  for (Index order = 1; order <= 3; ++order) {
    for (const auto& m : enumerate_monoids(order)) {
      corpus.push_back(m);
    }
  }
  for (const auto& [m, q] : corpus::monoid_ideal_corpus()) {
    CAPTURE(m.name);
    CHECK(verify_pushout(m, q, corpus).pass());
  }
}

TEST_CASE("cocone pair counts match the hand-computed values") {
  // Against the two-element monoids: the idempotent one admits the
  // collapse-to-unit and the identity-like cocone, the involution only
  // the total collapse.
  const auto m3 = corpus::m3();
  {
    const auto witness = verify_pushout(m3, {2}, {corpus::idempotent_two()});
    REQUIRE(witness.corpus_report.size() == 1);
    CHECK(witness.corpus_report[0].cocone_pairs == 2);
    CHECK(witness.pass());
  }
  {
    const auto witness = verify_pushout(m3, {2}, {corpus::cyclic_two()});
    CHECK(witness.corpus_report[0].cocone_pairs == 1);
    CHECK(witness.pass());
  }
  {
    const auto witness = verify_pushout(m3, {1, 2}, {trivial_monoid()});
    CHECK(witness.corpus_report[0].cocone_pairs == 1);
    CHECK(witness.pass());
  }
}

TEST_CASE("pushout verification rejects a broken corpus monoid") {
  FiniteMonoid bad;
  bad.name = "bad";
  bad.elements = {"E", "a"};
  bad.table = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(verify_pushout(corpus::m3(), {2}, {bad}), StructuralError);
}

TEST_CASE("weak simplicity depends on the witness policy") {
  const auto m = corpus::m3();
  CHECK(weak_simplicity_check(m, {2}, true).holds);
  const auto strict = weak_simplicity_check(m, {2}, false);
  CHECK_FALSE(strict.holds);
  CHECK(strict.failing == Index{1});  // a has only itself, and a*a = 0
}

}  // TEST_SUITE

}  // namespace
}  // namespace monocat
