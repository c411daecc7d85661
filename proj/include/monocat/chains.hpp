#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monocat/monoid.hpp"

namespace monocat {

// Existence data for sequences over a finite alphabet: a unary mask for
// single symbols and a binary relation over adjacent pairs. A word of
// length two or more exists exactly when all its adjacent pairs do.
struct BinaryExistence {
  std::string name;
  std::vector<std::string> alphabet;
  std::vector<bool> exists;                // unary mask
  std::vector<std::vector<bool>> pair_ok;  // binary part

  Index symbol_count() const { return alphabet.size(); }
  std::optional<Index> index_of(const std::string& symbol) const;
};

// Checks the existence axioms: some pair exists, some symbol exists,
// every existing symbol extends to the right and to the left, and the
// binary part is false wherever a symbol does not exist. The ternary
// extension rule is definitional (see ex_word) and is reported as such.
ValidationReport validate_rel(const BinaryExistence& rel);

// The empty word exists; a single symbol exists per the mask; a longer
// word exists when every adjacent pair does.
bool ex_word(const BinaryExistence& rel, const Word& w);

inline constexpr std::size_t kMaxChainLength = 12;

// All nonempty existing words up to max_len, in length-then-lex order.
std::vector<Word> enumerate_chains(const BinaryExistence& rel,
                                   std::size_t max_len);

// The four sequence properties, each checked by brute force up to
// max_len: contiguous factors of existing words exist; every existing
// word (up to max_len - 1) extends on both sides; appending the empty
// word changes nothing; single-symbol existence matches the mask.
struct FourProperties {
  bool factor_closed = false;
  bool extendable = false;
  bool empty_neutral = false;
  bool unit_length_matches = false;
  std::optional<std::string> factor_witness;
  std::optional<std::string> extension_witness;
  std::optional<std::string> empty_witness;
  std::optional<std::string> unit_witness;

  bool all() const {
    return factor_closed && extendable && empty_neutral && unit_length_matches;
  }
};
FourProperties verify_four_properties(const BinaryExistence& rel,
                                      std::size_t max_len);

// The nonexistent words as a forbidden-factor language: a word of
// length two or more is in the ideal when it contains a forbidden
// adjacent pair; a single symbol is in it when the symbol is dead.
struct ForbiddenFactorIdeal {
  std::vector<std::string> alphabet;
  std::vector<std::pair<Index, Index>> forbidden_pairs;
  std::vector<Index> dead_letters;
  std::size_t length_bound = 0;

  bool contains(const Word& w) const;
};

// Brute-force re-verification of the ideal laws within the bound, plus
// the bounded primality and weak-simplicity classifications.
struct BoundedIdealChecks {
  ForbiddenFactorIdeal ideal;
  bool two_sided = false;
  bool associative = false;
  bool matches_ex = false;
  bool prime = false;
  bool weakly_simple = false;  // with nonempty companions only
  std::optional<std::string> two_sided_witness;
  std::optional<std::string> associativity_witness;
  std::optional<std::string> matches_witness;
  std::optional<std::pair<Word, Word>> prime_witness;
  std::optional<Word> weak_witness;
};
BoundedIdealChecks ideal_from_rel(const BinaryExistence& rel,
                                  std::size_t length_bound);

// ---------------------------------------------------------------------
// Text format
//
//   rel <name>
//   alphabet <a> <b> ...
//   exists <a> ...              (symbols that exist on their own)
//   pair <a> <b>                (one line per true binary entry)
//
// '#' starts a comment.

BinaryExistence parse_rel_file(std::istream& in, const std::string& filename = "");
BinaryExistence parse_rel_text(const std::string& text,
                               const std::string& filename = "");
void print_rel(std::ostream& out, const BinaryExistence& rel);

// Symbols joined without separators when every symbol is a single
// character, with spaces otherwise.
std::string format_word(const BinaryExistence& rel, const Word& w);

}  // namespace monocat
