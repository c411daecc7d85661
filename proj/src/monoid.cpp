#include "monocat/monoid.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "monocat/errors.hpp"

namespace monocat {

std::optional<Index> FiniteMonoid::index_of(const std::string& element) const {
  for (Index i = 0; i < elements.size(); ++i) {
    if (elements[i] == element) {
      return i;
    }
  }
  return std::nullopt;
}

namespace {

// Shared structural screen for tables; axiom checks only run on data
// that passes it.
bool check_structure(const FiniteMonoid& m, std::vector<std::string>& out) {
  const Index n = m.elements.size();
  if (n == 0) {
    out.push_back("no elements");
    return false;
  }
  std::set<std::string> seen;
  for (const auto& e : m.elements) {
    if (e.empty()) {
      out.push_back("empty element name");
    } else if (!seen.insert(e).second) {
      out.push_back(fmt::format("duplicate element name '{}'", e));
    }
  }
  if (m.unit >= n) {
    out.push_back(fmt::format("unit index {} out of range", m.unit));
  }
  if (m.table.size() != n) {
    out.push_back(fmt::format("table has {} rows, expected {}", m.table.size(), n));
  }
  for (Index i = 0; i < m.table.size(); ++i) {
    if (m.table[i].size() != n) {
      out.push_back(fmt::format("table row {} has {} entries, expected {}", i,
                                m.table[i].size(), n));
      continue;
    }
    for (Index j = 0; j < n; ++j) {
      if (m.table[i][j] >= n) {
        out.push_back(fmt::format("table entry ({},{}) out of range", i, j));
      }
    }
  }
  return out.empty();
}

}  // namespace

ValidationReport verify_monoid(const FiniteMonoid& candidate) {
  ValidationReport report;
  if (!check_structure(candidate, report.structural)) {
    return report;
  }
  const Index n = candidate.size();
  const Index e = candidate.unit;
  const auto& name = candidate.elements;
  for (Index i = 0; i < n; ++i) {
    if (candidate.mul(e, i) != i) {
      report.violations.push_back(fmt::format(
          "unit-law ({},{}): expected {}, got {}", name[e], name[i], name[i],
          name[candidate.mul(e, i)]));
    }
    if (candidate.mul(i, e) != i) {
      report.violations.push_back(fmt::format(
          "unit-law ({},{}): expected {}, got {}", name[i], name[e], name[i],
          name[candidate.mul(i, e)]));
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const Index left = candidate.mul(candidate.mul(i, j), k);
        const Index right = candidate.mul(i, candidate.mul(j, k));
        if (left != right) {
          report.violations.push_back(fmt::format(
              "associativity ({},{},{}): ({}{}){} = {} but {}({}{}) = {}",
              name[i], name[j], name[k], name[i], name[j], name[k], name[left],
              name[i], name[j], name[k], name[right]));
        }
      }
    }
  }
  return report;
}

Index product(const FiniteMonoid& m, const Word& w) {
  Index acc = m.unit;
  for (Index letter : w) {
    if (letter >= m.size()) {
      throw StructuralError(fmt::format("word letter {} out of range", letter));
    }
    acc = m.mul(acc, letter);
  }
  return acc;
}

ValidationReport check_hom(const MonoidHom& hom) {
  ValidationReport report;
  const Index n = hom.source.size();
  if (hom.map.size() != n) {
    report.structural.push_back(fmt::format(
        "map has {} entries but source has {} elements", hom.map.size(), n));
    return report;
  }
  for (Index i = 0; i < n; ++i) {
    if (hom.map[i] >= hom.target.size()) {
      report.structural.push_back(fmt::format("map entry {} out of range", i));
      return report;
    }
  }
  const auto& sn = hom.source.elements;
  if (hom.map[hom.source.unit] != hom.target.unit) {
    report.violations.push_back(
        fmt::format("unit: {} maps to {}, not the target unit",
                    sn[hom.source.unit], hom.target.elements[hom.map[hom.source.unit]]));
    return report;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index via_source = hom.map[hom.source.mul(i, j)];
      const Index via_target = hom.target.mul(hom.map[i], hom.map[j]);
      if (via_source != via_target) {
        report.violations.push_back(fmt::format(
            "pair ({},{}): image of product is {} but product of images is {}",
            sn[i], sn[j], hom.target.elements[via_source],
            hom.target.elements[via_target]));
        return report;  // first failing pair only
      }
    }
  }
  return report;
}

namespace {

bool table_is_associative(const std::vector<std::vector<Index>>& t, Index n) {
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index ij = t[i][j];
      for (Index k = 0; k < n; ++k) {
        if (t[ij][k] != t[i][t[j][k]]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Relabels t by the permutation perm (old index -> new index).
std::vector<std::vector<Index>> relabel(const std::vector<std::vector<Index>>& t,
                                        const std::vector<Index>& perm) {
  const Index n = t.size();
  std::vector<std::vector<Index>> out(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      out[perm[i]][perm[j]] = perm[t[i][j]];
    }
  }
  return out;
}

std::vector<std::string> canonical_names(Index order) {
  static const char* kNames[] = {"E", "a", "b", "c"};
  std::vector<std::string> out;
  for (Index i = 0; i < order; ++i) {
    out.push_back(kNames[i]);
  }
  return out;
}

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids(Index order) {
  if (order == 0) {
    throw StructuralError("order must be at least 1");
  }
  if (order > kMaxEnumerationOrder) {
    throw StructuralError(fmt::format(
        "enumeration order {} exceeds the cap of {}", order, kMaxEnumerationOrder));
  }

  // Permutations of {1..order-1}; index 0 is the unit and stays put.
  std::vector<std::vector<Index>> perms;
  {
    std::vector<Index> p(order);
    std::iota(p.begin(), p.end(), Index{0});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
  }

  std::vector<FiniteMonoid> result;
  std::vector<std::vector<Index>> table(order, std::vector<Index>(order));
  for (Index i = 0; i < order; ++i) {
    table[0][i] = table[i][0] = i;  // unit row and column are forced
  }

  const Index free_cells = (order - 1) * (order - 1);
  std::vector<Index> cell(free_cells, 0);
  const auto apply_cells = [&] {
    Index c = 0;
    for (Index i = 1; i < order; ++i) {
      for (Index j = 1; j < order; ++j) {
        table[i][j] = cell[c++];
      }
    }
  };

  while (true) {
    apply_cells();
    if (table_is_associative(table, order)) {
      bool minimal = true;
      for (const auto& p : perms) {
        if (relabel(table, p) < table) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        FiniteMonoid m;
        m.elements = canonical_names(order);
        m.unit = 0;
        m.table = table;
        result.push_back(std::move(m));
      }
    }
    // Odometer over the free cells.
    Index pos = free_cells;
    while (pos > 0 && cell[pos - 1] + 1 == order) {
      cell[--pos] = 0;
    }
    if (pos == 0) {
      break;
    }
    ++cell[pos - 1];
  }

  for (Index i = 0; i < result.size(); ++i) {
    result[i].name = fmt::format("M{}.{}", order, i);
  }
  return result;
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& m,
                                                   const FiniteMonoid& n) {
  if (m.size() != n.size()) {
    return std::nullopt;
  }
  const Index size = m.size();
  // Candidate maps send m.unit to n.unit and permute the rest.
  std::vector<Index> others;
  for (Index i = 0; i < size; ++i) {
    if (i != n.unit) {
      others.push_back(i);
    }
  }
  std::sort(others.begin(), others.end());
  do {
    std::vector<Index> map(size);
    map[m.unit] = n.unit;
    Index next = 0;
    for (Index i = 0; i < size; ++i) {
      if (i != m.unit) {
        map[i] = others[next++];
      }
    }
    bool good = true;
    for (Index i = 0; i < size && good; ++i) {
      for (Index j = 0; j < size && good; ++j) {
        good = map[m.mul(i, j)] == n.mul(map[i], map[j]);
      }
    }
    if (good) {
      return map;
    }
  } while (std::next_permutation(others.begin(), others.end()));
  return std::nullopt;
}

std::vector<std::vector<Index>> all_homs(const FiniteMonoid& m,
                                         const FiniteMonoid& x) {
  const Index n = m.size();
  const Index xs = x.size();
  std::vector<std::vector<Index>> homs;
  std::vector<Index> map(n, 0);
  map[m.unit] = x.unit;

  // Odometer over the non-unit positions.
  std::vector<Index> free_pos;
  for (Index i = 0; i < n; ++i) {
    if (i != m.unit) {
      free_pos.push_back(i);
    }
  }
  const auto is_hom = [&] {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (map[m.mul(i, j)] != x.mul(map[i], map[j])) {
          return false;
        }
      }
    }
    return true;
  };
  while (true) {
    if (is_hom()) {
      homs.push_back(map);
    }
    Index pos = free_pos.size();
    while (pos > 0 && map[free_pos[pos - 1]] + 1 == xs) {
      map[free_pos[--pos]] = 0;
    }
    if (pos == 0) {
      break;
    }
    ++map[free_pos[pos - 1]];
  }
  return homs;
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

Index lookup(const FiniteMonoid& m, const std::string& element,
             const std::string& filename, int line_no) {
  auto idx = m.index_of(element);
  if (!idx) {
    throw ParseError(
        fmt::format("{}:{}: unknown element '{}'", filename, line_no, element),
        line_no);
  }
  return *idx;
}

}  // namespace

MonoidFile parse_monoid_file(std::istream& in, const std::string& filename) {
  MonoidFile file;
  FiniteMonoid& m = file.monoid;
  std::string line;
  int line_no = 0;
  enum class State { Header, Elements, Unit, Rows, Ideals } state = State::Header;
  Index rows_seen = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    switch (state) {
      case State::Header:
        if (tokens.size() != 2 || tokens[0] != "monoid") {
          throw ParseError(fmt::format("{}:{}: expected 'monoid <name>'",
                                       filename, line_no), line_no);
        }
        m.name = tokens[1];
        state = State::Elements;
        break;
      case State::Elements: {
        if (tokens[0] != "elements" || tokens.size() < 2) {
          throw ParseError(fmt::format("{}:{}: expected 'elements <e1> ...'",
                                       filename, line_no), line_no);
        }
        std::set<std::string> seen;
        for (Index i = 1; i < tokens.size(); ++i) {
          if (!seen.insert(tokens[i]).second) {
            throw ParseError(fmt::format("{}:{}: duplicate element '{}'",
                                         filename, line_no, tokens[i]), line_no);
          }
          m.elements.push_back(tokens[i]);
        }
        state = State::Unit;
        break;
      }
      case State::Unit:
        if (tokens.size() != 2 || tokens[0] != "unit") {
          throw ParseError(fmt::format("{}:{}: expected 'unit <e>'",
                                       filename, line_no), line_no);
        }
        m.unit = lookup(m, tokens[1], filename, line_no);
        state = State::Rows;
        break;
      case State::Rows: {
        if (tokens.size() != m.size()) {
          throw ParseError(fmt::format("{}:{}: table row has {} entries, expected {}",
                                       filename, line_no, tokens.size(), m.size()),
                           line_no);
        }
        std::vector<Index> row;
        for (const auto& tok : tokens) {
          row.push_back(lookup(m, tok, filename, line_no));
        }
        m.table.push_back(std::move(row));
        if (++rows_seen == m.size()) {
          state = State::Ideals;
        }
        break;
      }
      case State::Ideals: {
        if (tokens[0] != "ideal" || tokens.size() < 3) {
          throw ParseError(fmt::format("{}:{}: expected 'ideal <name> <e1> ...'",
                                       filename, line_no), line_no);
        }
        NamedSubset subset;
        subset.name = tokens[1];
        for (Index i = 2; i < tokens.size(); ++i) {
          subset.members.push_back(lookup(m, tokens[i], filename, line_no));
        }
        std::sort(subset.members.begin(), subset.members.end());
        subset.members.erase(
            std::unique(subset.members.begin(), subset.members.end()),
            subset.members.end());
        file.ideals.push_back(std::move(subset));
        break;
      }
    }
  }
  if (state != State::Ideals) {
    throw ParseError(fmt::format("{}:{}: unexpected end of file", filename, line_no),
                     line_no);
  }
  return file;
}

MonoidFile parse_monoid_text(const std::string& text, const std::string& filename) {
  std::istringstream in(text);
  return parse_monoid_file(in, filename);
}

const NamedSubset* MonoidFile::find_ideal(const std::string& ideal_name) const {
  for (const auto& subset : ideals) {
    if (subset.name == ideal_name) {
      return &subset;
    }
  }
  return nullptr;
}

void print_monoid(std::ostream& out, const FiniteMonoid& m,
                  const std::vector<NamedSubset>& ideals) {
  out << "monoid " << m.name << "\n";
  out << "elements";
  for (const auto& e : m.elements) {
    out << ' ' << e;
  }
  out << "\nunit " << m.elements[m.unit] << "\n";
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) {
      out << (j ? " " : "") << m.elements[m.mul(i, j)];
    }
    out << "\n";
  }
  for (const auto& subset : ideals) {
    out << "ideal " << subset.name;
    for (Index member : subset.members) {
      out << ' ' << m.elements[member];
    }
    out << "\n";
  }
}

}  // namespace monocat
