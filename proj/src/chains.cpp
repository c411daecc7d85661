#include "monocat/chains.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "monocat/errors.hpp"

namespace monocat {

std::optional<Index> BinaryExistence::index_of(const std::string& symbol) const {
  for (Index i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == symbol) {
      return i;
    }
  }
  return std::nullopt;
}

namespace {

bool check_rel_structure(const BinaryExistence& rel,
                         std::vector<std::string>& out) {
  const Index n = rel.alphabet.size();
  std::set<std::string> seen;
  for (const auto& s : rel.alphabet) {
    if (!seen.insert(s).second) {
      out.push_back(fmt::format("duplicate symbol '{}'", s));
    }
  }
  if (rel.exists.size() != n) {
    out.push_back("unary mask size does not match the alphabet");
  }
  if (rel.pair_ok.size() != n) {
    out.push_back("binary table size does not match the alphabet");
  } else {
    for (const auto& row : rel.pair_ok) {
      if (row.size() != n) {
        out.push_back("binary table size does not match the alphabet");
        break;
      }
    }
  }
  return out.empty();
}

}  // namespace

ValidationReport validate_rel(const BinaryExistence& rel) {
  ValidationReport report;
  if (!check_rel_structure(rel, report.structural)) {
    return report;
  }
  const Index n = rel.alphabet.size();

  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (rel.pair_ok[x][y] && (!rel.exists[x] || !rel.exists[y])) {
        report.violations.push_back(fmt::format(
            "pair ({},{}) exists but a member symbol does not",
            rel.alphabet[x], rel.alphabet[y]));
      }
    }
  }

  bool some_pair = false;
  for (Index x = 0; x < n && !some_pair; ++x) {
    for (Index y = 0; y < n && !some_pair; ++y) {
      some_pair = rel.pair_ok[x][y];
    }
  }
  if (!some_pair) {
    report.violations.push_back("no pair exists");
  }
  if (std::none_of(rel.exists.begin(), rel.exists.end(),
                   [](bool b) { return b; })) {
    report.violations.push_back("no symbol exists");
  }
  for (Index x = 0; x < n; ++x) {
    if (!rel.exists[x]) {
      continue;
    }
    bool right = false;
    bool left = false;
    for (Index y = 0; y < n; ++y) {
      right = right || rel.pair_ok[x][y];
      left = left || rel.pair_ok[y][x];
    }
    if (!right) {
      report.violations.push_back(
          fmt::format("'{}' exists but extends to no pair on the right",
                      rel.alphabet[x]));
    }
    if (!left) {
      report.violations.push_back(
          fmt::format("'{}' exists but extends to no pair on the left",
                      rel.alphabet[x]));
    }
  }
  return report;
}

bool ex_word(const BinaryExistence& rel, const Word& w) {
  for (Index letter : w) {
    if (letter >= rel.alphabet.size()) {
      throw StructuralError(fmt::format("symbol {} outside the alphabet", letter));
    }
  }
  if (w.empty()) {
    return true;
  }
  if (w.size() == 1) {
    return rel.exists[w[0]];
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!rel.pair_ok[w[i]][w[i + 1]]) {
      return false;
    }
  }
  return true;
}

namespace {

// Depth-first enumeration in symbol order. Pruning on a failed adjacent
// pair is exact for words of length two or more: they exist exactly
// when every adjacent pair does.
void collect_chains(const BinaryExistence& rel, std::size_t max_len, Word& word,
                    std::vector<std::vector<Word>>& by_length) {
  const std::size_t len = word.size();
  if (len >= 1) {
    if (len == 1 ? rel.exists[word[0]] : true) {
      by_length[len].push_back(word);
    }
    if (len == max_len) {
      return;
    }
  }
  for (Index next = 0; next < rel.alphabet.size(); ++next) {
    if (len >= 1 && !rel.pair_ok[word.back()][next]) {
      continue;
    }
    word.push_back(next);
    collect_chains(rel, max_len, word, by_length);
    word.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_chains(const BinaryExistence& rel,
                                   std::size_t max_len) {
  if (max_len > kMaxChainLength) {
    throw StructuralError(fmt::format("length {} exceeds the cap of {}",
                                      max_len, kMaxChainLength));
  }
  std::vector<std::vector<Word>> by_length(max_len + 1);
  Word word;
  collect_chains(rel, max_len, word, by_length);
  std::vector<Word> chains;
  for (const auto& bucket : by_length) {
    chains.insert(chains.end(), bucket.begin(), bucket.end());
  }
  return chains;
}

namespace {

std::vector<Word> all_words_up_to(Index symbols, std::size_t max_len) {
  std::vector<Word> words;
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word w(len, 0);
    while (true) {
      words.push_back(w);
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] + 1 == symbols) {
        w[--pos] = 0;
      }
      if (pos == 0) {
        break;
      }
      ++w[pos - 1];
    }
  }
  return words;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

FourProperties verify_four_properties(const BinaryExistence& rel,
                                      std::size_t max_len) {
  FourProperties props;
  const auto chains = enumerate_chains(rel, max_len);

  props.factor_closed = true;
  for (const auto& w : chains) {
    for (std::size_t i = 0; i < w.size() && props.factor_closed; ++i) {
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        const Word factor(w.begin() + i, w.begin() + j);
        if (!ex_word(rel, factor)) {
          props.factor_closed = false;
          props.factor_witness = fmt::format("factor '{}' of '{}'",
                                             format_word(rel, factor),
                                             format_word(rel, w));
          break;
        }
      }
    }
    if (!props.factor_closed) {
      break;
    }
  }

  props.extendable = true;
  for (const auto& w : chains) {
    if (w.size() >= max_len) {
      continue;
    }
    bool right = false;
    bool left = false;
    for (Index s = 0; s < rel.symbol_count(); ++s) {
      right = right || ex_word(rel, concat(w, {s}));
      left = left || ex_word(rel, concat({s}, w));
    }
    if (!right || !left) {
      props.extendable = false;
      props.extension_witness =
          fmt::format("'{}' extends on no {}", format_word(rel, w),
                      right ? "left" : "right");
      break;
    }
  }

  props.empty_neutral = ex_word(rel, {});
  if (props.empty_neutral) {
    const auto sample = all_words_up_to(rel.symbol_count(),
                                        std::min<std::size_t>(max_len, 6));
    for (const auto& w : sample) {
      const bool direct = ex_word(rel, w);
      if (ex_word(rel, concat(w, {})) != direct ||
          ex_word(rel, concat({}, w)) != direct) {
        props.empty_neutral = false;
        props.empty_witness = format_word(rel, w);
        break;
      }
    }
  } else {
    props.empty_witness = "empty word does not exist";
  }

  props.unit_length_matches = true;
  for (Index s = 0; s < rel.symbol_count(); ++s) {
    if (ex_word(rel, {s}) != static_cast<bool>(rel.exists[s])) {
      props.unit_length_matches = false;
      props.unit_witness = rel.alphabet[s];
      break;
    }
  }
  return props;
}

bool ForbiddenFactorIdeal::contains(const Word& w) const {
  if (w.empty()) {
    return false;  // the empty word plays the unit and is never a member
  }
  if (w.size() == 1) {
    return std::find(dead_letters.begin(), dead_letters.end(), w[0]) !=
           dead_letters.end();
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::find(forbidden_pairs.begin(), forbidden_pairs.end(),
                  std::make_pair(w[i], w[i + 1])) != forbidden_pairs.end()) {
      return true;
    }
  }
  return false;
}

BoundedIdealChecks ideal_from_rel(const BinaryExistence& rel,
                                  std::size_t length_bound) {
  if (length_bound > kMaxChainLength) {
    throw StructuralError(fmt::format("length bound {} exceeds the cap of {}",
                                      length_bound, kMaxChainLength));
  }
  BoundedIdealChecks checks;
  checks.ideal.alphabet = rel.alphabet;
  checks.ideal.length_bound = length_bound;
  for (Index x = 0; x < rel.symbol_count(); ++x) {
    if (!rel.exists[x]) {
      checks.ideal.dead_letters.push_back(x);
    }
    for (Index y = 0; y < rel.symbol_count(); ++y) {
      if (!rel.pair_ok[x][y]) {
        checks.ideal.forbidden_pairs.emplace_back(x, y);
      }
    }
  }

  const auto words = all_words_up_to(rel.symbol_count(), length_bound);
  std::vector<bool> in_ideal;
  in_ideal.reserve(words.size());
  for (const auto& w : words) {
    in_ideal.push_back(!ex_word(rel, w));
  }

  checks.matches_ex = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (checks.ideal.contains(words[i]) != in_ideal[i]) {
      checks.matches_ex = false;
      checks.matches_witness = format_word(rel, words[i]);
      break;
    }
  }

  const auto member = [&](const Word& w) { return !ex_word(rel, w); };

  checks.two_sided = true;
  for (std::size_t i = 0; i < words.size() && checks.two_sided; ++i) {
    if (!in_ideal[i]) {
      continue;
    }
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[i].size() + words[j].size() > length_bound) {
        continue;
      }
      if (member(concat(words[i], words[j])) &&
          member(concat(words[j], words[i]))) {
        continue;
      }
      checks.two_sided = false;
      checks.two_sided_witness =
          fmt::format("'{}' with '{}'", format_word(rel, words[i]),
                      format_word(rel, words[j]));
      break;
    }
  }

  checks.associative = true;
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.size() + b.size() >= length_bound) {
        continue;
      }
      for (const auto& c : words) {
        if (a.size() + b.size() + c.size() > length_bound) {
          continue;
        }
        if (member(concat(concat(a, b), c)) && !member(concat(a, b)) &&
            !member(concat(b, c))) {
          checks.associative = false;
          checks.associativity_witness = fmt::format(
              "('{}','{}','{}')", format_word(rel, a), format_word(rel, b),
              format_word(rel, c));
          break;
        }
      }
      if (!checks.associative) break;
    }
    if (!checks.associative) break;
  }

  checks.prime = true;
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() + v.size() > length_bound) {
        continue;
      }
      const bool product_in = member(concat(u, v));
      const bool factor_in = member(u) || member(v);
      if (product_in != factor_in) {
        checks.prime = false;
        checks.prime_witness = std::make_pair(u, v);
        break;
      }
    }
    if (!checks.prime) break;
  }

  checks.weakly_simple = true;
  for (const auto& x : words) {
    if (member(x) || x.size() >= length_bound) {
      continue;
    }
    bool right = false;
    bool left = false;
    for (const auto& y : words) {
      if (member(y) || x.size() + y.size() > length_bound) {
        continue;
      }
      right = right || !member(concat(x, y));
      left = left || !member(concat(y, x));
    }
    if (!right || !left) {
      checks.weakly_simple = false;
      checks.weak_witness = x;
      break;
    }
  }
  return checks;
}

// ---------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      break;
    }
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

BinaryExistence parse_rel_file(std::istream& in, const std::string& filename) {
  BinaryExistence rel;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  bool saw_alphabet = false;
  bool saw_exists = false;

  const auto symbol_index = [&](const std::string& symbol, int at) {
    auto idx = rel.index_of(symbol);
    if (!idx) {
      throw ParseError(fmt::format("{}:{}: unknown symbol '{}'", filename, at,
                                   symbol), at);
    }
    return *idx;
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "rel") {
        throw ParseError(fmt::format("{}:{}: expected 'rel <name>'", filename,
                                     line_no), line_no);
      }
      rel.name = tokens[1];
      saw_header = true;
      continue;
    }
    if (!saw_alphabet) {
      if (tokens[0] != "alphabet") {
        throw ParseError(fmt::format("{}:{}: expected 'alphabet <a> ...'",
                                     filename, line_no), line_no);
      }
      std::set<std::string> seen;
      for (Index i = 1; i < tokens.size(); ++i) {
        if (!seen.insert(tokens[i]).second) {
          throw ParseError(fmt::format("{}:{}: duplicate symbol '{}'", filename,
                                       line_no, tokens[i]), line_no);
        }
        rel.alphabet.push_back(tokens[i]);
      }
      rel.exists.assign(rel.alphabet.size(), false);
      rel.pair_ok.assign(rel.alphabet.size(),
                         std::vector<bool>(rel.alphabet.size(), false));
      saw_alphabet = true;
      continue;
    }
    if (!saw_exists) {
      if (tokens[0] != "exists") {
        throw ParseError(fmt::format("{}:{}: expected 'exists <a> ...'",
                                     filename, line_no), line_no);
      }
      for (Index i = 1; i < tokens.size(); ++i) {
        rel.exists[symbol_index(tokens[i], line_no)] = true;
      }
      saw_exists = true;
      continue;
    }
    if (tokens[0] != "pair" || tokens.size() != 3) {
      throw ParseError(fmt::format("{}:{}: expected 'pair <a> <b>'", filename,
                                   line_no), line_no);
    }
    rel.pair_ok[symbol_index(tokens[1], line_no)]
               [symbol_index(tokens[2], line_no)] = true;
  }
  if (!saw_header || !saw_alphabet || !saw_exists) {
    throw ParseError(fmt::format("{}:{}: unexpected end of file", filename,
                                 line_no), line_no);
  }
  return rel;
}

BinaryExistence parse_rel_text(const std::string& text,
                               const std::string& filename) {
  std::istringstream in(text);
  return parse_rel_file(in, filename);
}

void print_rel(std::ostream& out, const BinaryExistence& rel) {
  out << "rel " << rel.name << "\n";
  out << "alphabet";
  for (const auto& s : rel.alphabet) {
    out << ' ' << s;
  }
  out << "\nexists";
  for (Index i = 0; i < rel.symbol_count(); ++i) {
    if (rel.exists[i]) {
      out << ' ' << rel.alphabet[i];
    }
  }
  out << "\n";
  for (Index x = 0; x < rel.symbol_count(); ++x) {
    for (Index y = 0; y < rel.symbol_count(); ++y) {
      if (rel.pair_ok[x][y]) {
        out << "pair " << rel.alphabet[x] << ' ' << rel.alphabet[y] << "\n";
      }
    }
  }
}

std::string format_word(const BinaryExistence& rel, const Word& w) {
  const bool compact = std::all_of(rel.alphabet.begin(), rel.alphabet.end(),
                                   [](const std::string& s) {
                                     return s.size() == 1;
                                   });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) {
      out += ' ';
    }
    out += rel.alphabet[w[i]];
  }
  return out;
}

}  // namespace monocat
