#include "monocat/chains.hpp"

#include <optional>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "monocat/errors.hpp"

namespace monocat {
namespace {

// Independent oracle for binary determination: evaluate a word by
// splitting it at every interior position into two overlapping halves
// and recursing. All splits must agree.
bool oracle_ex(const BinaryExistence& rel, const Word& w) {
  if (w.empty()) {
    return true;
  }
  if (w.size() == 1) {
    return rel.exists[w[0]];
  }
  if (w.size() == 2) {
    return rel.pair_ok[w[0]][w[1]];
  }
  std::optional<bool> agreed;
  for (std::size_t pivot = 1; pivot + 1 < w.size(); ++pivot) {
    const Word left(w.begin(), w.begin() + pivot + 1);
    const Word right(w.begin() + pivot, w.end());
    const bool value = oracle_ex(rel, left) && oracle_ex(rel, right);
    if (agreed.has_value()) {
      REQUIRE(value == *agreed);
    }
    agreed = value;
  }
  return *agreed;
}

std::vector<Word> all_words(Index symbols, std::size_t max_len) {
  std::vector<Word> words{{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = start; i < end; ++i) {
      for (Index s = 0; s < symbols; ++s) {
        Word w = words[i];
        w.push_back(s);
        words.push_back(std::move(w));
      }
    }
    start = end;
  }
  return words;
}

// ex(b) holds but no pair involves b: the extension axiom must fail.
BinaryExistence stranded_b() {
  return corpus::make_rel("stranded-b", 2, {{0, 0}}, {true, true});
}

TEST_SUITE("chains") {

TEST_CASE("the corpus relations validate") {
  for (const auto& rel : corpus::rel_corpus()) {
    CAPTURE(rel.name);
    CHECK(validate_rel(rel).ok());
  }
}

TEST_CASE("a stranded symbol fails the extension axioms") {
  const auto report = validate_rel(stranded_b());
  CHECK_FALSE(report.ok());
  bool right = false;
  bool left = false;
  for (const auto& v : report.violations) {
    right = right || v.find("'b' exists but extends to no pair on the right") !=
                         std::string::npos;
    left = left || v.find("'b' exists but extends to no pair on the left") !=
                       std::string::npos;
  }
  CHECK(right);
  CHECK(left);
}

TEST_CASE("an empty alphabet fails the existence axioms") {
  BinaryExistence rel;
  rel.name = "void";
  const auto report = validate_rel(rel);
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    found = found || v.find("no symbol exists") != std::string::npos;
  }
  CHECK(found);
}

TEST_CASE("a pair over a dead symbol is inconsistent") {
  auto rel = corpus::contains_a_dead();
  rel.pair_ok[0][1] = true;  // a is dead but (a,b) claimed
  const auto report = validate_rel(rel);
  CHECK_FALSE(report.ok());
}

TEST_CASE("word existence over the alternating relation") {
  const auto rel = corpus::alternating();
  CHECK(ex_word(rel, {0, 1, 0}));        // aba
  CHECK_FALSE(ex_word(rel, {0, 0, 1}));  // aab
  CHECK(ex_word(rel, {}));
  CHECK_THROWS_AS(ex_word(rel, {9}), StructuralError);
}

TEST_CASE("chains of the alternating relation up to length three") {
  const auto rel = corpus::alternating();
  const auto chains = enumerate_chains(rel, 3);
  const std::vector<Word> expected{{0},    {1},    {0, 1},
                                   {1, 0}, {0, 1, 0}, {1, 0, 1}};
  CHECK(chains == expected);
}

TEST_CASE("only unit chains without pairs; a free letter runs on") {
  auto unary_only = corpus::make_rel("unary", 2, {});
  CHECK(enumerate_chains(unary_only, 3) == std::vector<Word>{{0}, {1}});

  auto one_letter = corpus::make_rel("one", 1, {{0, 0}});
  CHECK(enumerate_chains(one_letter, 3) ==
        std::vector<Word>{{0}, {0, 0}, {0, 0, 0}});
}

TEST_CASE("the chain cap is enforced") {
  CHECK_THROWS_AS(enumerate_chains(corpus::alternating(), 13), StructuralError);
}

TEST_CASE("binary determination: any-split recursion agrees with ex_word") {
  for (const auto& rel : corpus::rel_corpus()) {
    CAPTURE(rel.name);
    for (const auto& w : all_words(rel.symbol_count(), 8)) {
      CHECK(oracle_ex(rel, w) == ex_word(rel, w));
    }
  }
}

TEST_CASE("the four properties hold on the well-behaved relations") {
  for (const auto& rel : corpus::rel_corpus()) {
    CAPTURE(rel.name);
    const auto props = verify_four_properties(rel, 6);
    CHECK(props.factor_closed);
    CHECK(props.extendable);
    CHECK(props.empty_neutral);
    CHECK(props.unit_length_matches);
    CHECK(props.all());
  }
}

TEST_CASE("extension fails once a symbol strands") {
  const auto props = verify_four_properties(stranded_b(), 5);
  CHECK(props.factor_closed);
  CHECK_FALSE(props.extendable);
  REQUIRE(props.extension_witness.has_value());
  CHECK(props.extension_witness->find("'b'") != std::string::npos);
}

TEST_CASE("chain counts never drop when the relation relaxes") {
  for (const auto& rel : {corpus::alternating(), corpus::forbid_bb(),
                          corpus::forbid_ab()}) {
    CAPTURE(rel.name);
    for (Index x = 0; x < rel.symbol_count(); ++x) {
      for (Index y = 0; y < rel.symbol_count(); ++y) {
        if (rel.pair_ok[x][y]) {
          continue;
        }
        auto relaxed = rel;
        relaxed.pair_ok[x][y] = true;
        for (std::size_t len = 1; len <= 6; ++len) {
          CHECK(enumerate_chains(relaxed, len).size() >=
                enumerate_chains(rel, len).size());
        }
      }
    }
  }
}

TEST_CASE("the forbidden-factor ideal is associative but not prime") {
  const auto rel = corpus::forbid_ab();
  for (std::size_t bound = 2; bound <= 8; ++bound) {
    CAPTURE(bound);
    const auto checks = ideal_from_rel(rel, bound);
    CHECK(checks.two_sided);
    CHECK(checks.associative);
    CHECK(checks.matches_ex);
    CHECK_FALSE(checks.prime);
    REQUIRE(checks.prime_witness.has_value());
    CHECK(checks.prime_witness->first == Word{0});
    CHECK(checks.prime_witness->second == Word{1});
  }
}

TEST_CASE("the dead-letter ideal is prime within the bound") {
  const auto checks = ideal_from_rel(corpus::contains_a_dead(), 6);
  CHECK(checks.two_sided);
  CHECK(checks.associative);
  CHECK(checks.matches_ex);
  CHECK(checks.prime);
}

TEST_CASE("the free monoid has an empty ideal and vacuous checks") {
  const auto checks = ideal_from_rel(corpus::free_two(), 5);
  CHECK(checks.ideal.forbidden_pairs.empty());
  CHECK(checks.ideal.dead_letters.empty());
  CHECK(checks.two_sided);
  CHECK(checks.associative);
  CHECK(checks.matches_ex);
  CHECK(checks.prime);
  CHECK(checks.weakly_simple);
}

TEST_CASE("the forbidden-factor language is weakly simple within the bound") {
  const auto checks = ideal_from_rel(corpus::forbid_ab(), 8);
  CHECK(checks.weakly_simple);
}

TEST_CASE("chains are the complement of the ideal within the bound") {
  for (const auto& rel : corpus::rel_corpus()) {
    CAPTURE(rel.name);
    const auto checks = ideal_from_rel(rel, 6);
    for (std::size_t len = 1; len <= 6; ++len) {
      std::size_t outside = 0;
      for (const auto& w : all_words(rel.symbol_count(), len)) {
        if (w.size() == len && !checks.ideal.contains(w)) {
          ++outside;
        }
      }
      std::size_t chains_this_len = 0;
      for (const auto& chain : enumerate_chains(rel, len)) {
        chains_this_len += chain.size() == len;
      }
      CHECK(outside == chains_this_len);
    }
  }
}

TEST_CASE("rel files round-trip") {
  const std::string text =
      "rel alternating\n"
      "alphabet a b\n"
      "exists a b\n"
      "pair a b\n"
      "pair b a\n";
  const auto rel = parse_rel_text(text, "alt.rel");
  CHECK(rel.pair_ok == corpus::alternating().pair_ok);
  CHECK(rel.exists == corpus::alternating().exists);

  std::ostringstream out;
  print_rel(out, rel);
  CHECK(out.str() == text);

  CHECK_THROWS_AS(parse_rel_text("rel x\nalphabet a\npair a a\n", "x"),
                  ParseError);  // missing exists line
  CHECK_THROWS_AS(
      parse_rel_text("rel x\nalphabet a\nexists a\npair a q\n", "x"),
      ParseError);  // unknown symbol
}

TEST_CASE("word formatting is compact for single-character alphabets") {
  const auto rel = corpus::alternating();
  CHECK(format_word(rel, {0, 1, 0}) == "aba");

  BinaryExistence wide;
  wide.alphabet = {"aa", "b"};
  wide.exists = {true, true};
  wide.pair_ok = {{false, true}, {false, false}};
  CHECK(format_word(wide, {0, 1}) == "aa b");
}

}  // TEST_SUITE

}  // namespace
}  // namespace monocat
