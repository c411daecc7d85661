#include "monocat/category.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "monocat/errors.hpp"

namespace monocat {

bool FiniteCategory::is_identity(Index arrow) const {
  return std::find(identities.begin(), identities.end(), arrow) !=
         identities.end();
}

namespace {

bool check_category_structure(const FiniteCategory& k,
                              std::vector<std::string>& out) {
  std::set<std::string> names;
  for (const auto& obj : k.objects) {
    if (!names.insert(obj).second) {
      out.push_back(fmt::format("duplicate object name '{}'", obj));
    }
  }
  names.clear();
  for (const auto& arrow : k.arrows) {
    if (!names.insert(arrow.name).second) {
      out.push_back(fmt::format("duplicate arrow name '{}'", arrow.name));
    }
    if (arrow.dom >= k.objects.size() || arrow.cod >= k.objects.size()) {
      out.push_back(fmt::format("arrow '{}' references a missing object",
                                arrow.name));
    }
  }
  if (k.identities.size() != k.objects.size()) {
    out.push_back(fmt::format("{} identities for {} objects",
                              k.identities.size(), k.objects.size()));
  }
  if (k.composition.size() != k.arrows.size()) {
    out.push_back("composition table size does not match the arrows");
  } else {
    for (const auto& row : k.composition) {
      if (row.size() != k.arrows.size()) {
        out.push_back("composition table size does not match the arrows");
        break;
      }
      for (Index entry : row) {
        if (entry != kUndefined && entry >= k.arrows.size()) {
          out.push_back("composition entry references a missing arrow");
        }
      }
    }
  }
  if (!out.empty()) {
    return false;
  }
  std::set<Index> identity_arrows;
  for (Index obj = 0; obj < k.objects.size(); ++obj) {
    const Index id = k.identities[obj];
    if (id >= k.arrows.size()) {
      out.push_back(fmt::format("identity of '{}' references a missing arrow",
                                k.objects[obj]));
    } else if (!identity_arrows.insert(id).second) {
      out.push_back(fmt::format("arrow '{}' is the identity of two objects",
                                k.arrows[id].name));
    }
  }
  return out.empty();
}

}  // namespace

ValidationReport verify_category(const FiniteCategory& k) {
  ValidationReport report;
  if (!check_category_structure(k, report.structural)) {
    return report;
  }
  const auto arrow_name = [&](Index i) { return k.arrows[i].name; };

  for (Index obj = 0; obj < k.objects.size(); ++obj) {
    const Arrow& id = k.arrows[k.identities[obj]];
    if (id.dom != obj || id.cod != obj) {
      report.violations.push_back(fmt::format(
          "identity '{}' of object '{}' is not an endo-arrow of it", id.name,
          k.objects[obj]));
    }
  }

  const Index n = k.arrows.size();
  for (Index f = 0; f < n; ++f) {
    for (Index g = 0; g < n; ++g) {
      const bool composable = k.arrows[f].cod == k.arrows[g].dom;
      const Index h = k.compose(f, g);
      if (composable && h == kUndefined) {
        report.violations.push_back(fmt::format("missing composite {} * {}",
                                                arrow_name(f), arrow_name(g)));
        continue;
      }
      if (!composable && h != kUndefined) {
        report.violations.push_back(
            fmt::format("composite {} * {} defined on a non-composable pair",
                        arrow_name(f), arrow_name(g)));
        continue;
      }
      if (h != kUndefined && (k.arrows[h].dom != k.arrows[f].dom ||
                              k.arrows[h].cod != k.arrows[g].cod)) {
        report.violations.push_back(
            fmt::format("composite {} * {} = {} has the wrong endpoints",
                        arrow_name(f), arrow_name(g), arrow_name(h)));
      }
    }
  }
  if (!report.violations.empty()) {
    return report;  // identity and associativity laws need total data
  }

  for (Index f = 0; f < n; ++f) {
    const Index left = k.compose(k.identities[k.arrows[f].dom], f);
    const Index right = k.compose(f, k.identities[k.arrows[f].cod]);
    if (left != f) {
      report.violations.push_back(
          fmt::format("identity law fails on the left of {}", arrow_name(f)));
    }
    if (right != f) {
      report.violations.push_back(
          fmt::format("identity law fails on the right of {}", arrow_name(f)));
    }
  }
  for (Index f = 0; f < n; ++f) {
    for (Index g = 0; g < n; ++g) {
      if (k.arrows[f].cod != k.arrows[g].dom) continue;
      for (Index h = 0; h < n; ++h) {
        if (k.arrows[g].cod != k.arrows[h].dom) continue;
        const Index left = k.compose(k.compose(f, g), h);
        const Index right = k.compose(f, k.compose(g, h));
        if (left != right) {
          report.violations.push_back(fmt::format(
              "associativity ({},{},{}): ({}{}){} = {} but {}({}{}) = {}",
              arrow_name(f), arrow_name(g), arrow_name(h), arrow_name(f),
              arrow_name(g), arrow_name(h), arrow_name(left), arrow_name(f),
              arrow_name(g), arrow_name(h), arrow_name(right)));
        }
      }
    }
  }
  return report;
}

namespace {

std::string fresh_element_name(std::string base,
                               const std::vector<Arrow>& arrows) {
  const auto clashes = [&](const std::string& candidate) {
    return std::any_of(arrows.begin(), arrows.end(), [&](const Arrow& a) {
      return a.name == candidate;
    });
  };
  while (clashes(base)) {
    base += '\'';
  }
  return base;
}

}  // namespace

CategoryEmbedding category_to_monoid(const FiniteCategory& k) {
  const auto report = verify_category(k);
  if (!report.ok()) {
    throw StructuralError(fmt::format(
        "category fails verification: {}",
        report.structural.empty() ? report.violations.front()
                                  : report.structural.front()));
  }

  CategoryEmbedding embedding;
  FiniteMonoid& m = embedding.completed.monoid;
  const Index arrow_count = k.arrows.size();

  m.name = k.name.empty() ? "completion" : k.name + ".monoid";
  m.elements.push_back(fresh_element_name("E^", k.arrows));
  for (const auto& arrow : k.arrows) {
    m.elements.push_back(arrow.name);
  }
  m.elements.push_back(fresh_element_name("0^", k.arrows));
  m.unit = 0;
  const Index zero = arrow_count + 1;
  embedding.completed.zero = zero;

  m.table.assign(m.size(), std::vector<Index>(m.size()));
  for (Index i = 0; i < m.size(); ++i) {
    m.table[0][i] = m.table[i][0] = i;
    m.table[zero][i] = m.table[i][zero] = zero;
  }
  for (Index f = 0; f < arrow_count; ++f) {
    for (Index g = 0; g < arrow_count; ++g) {
      const Index h = k.compose(f, g);
      m.table[f + 1][g + 1] = h == kUndefined ? zero : h + 1;
    }
  }

  embedding.arrow_to_element.resize(arrow_count);
  std::iota(embedding.arrow_to_element.begin(), embedding.arrow_to_element.end(),
            Index{1});
  return embedding;
}

ZeroCheck verify_associative_zero(const MonoidWithZero& mz) {
  const FiniteMonoid& m = mz.monoid;
  ZeroCheck result;
  if (mz.zero >= m.size() || mz.zero == m.unit) {
    result.detail = "zero index is not a non-unit element";
    return result;
  }
  for (Index x = 0; x < m.size(); ++x) {
    if (m.mul(mz.zero, x) != mz.zero || m.mul(x, mz.zero) != mz.zero) {
      result.detail = fmt::format("zero does not absorb '{}'", m.elements[x]);
      return result;
    }
  }
  for (Index a = 0; a < m.size(); ++a) {
    if (a == m.unit) continue;
    for (Index b = 0; b < m.size(); ++b) {
      if (b == m.unit) continue;
      const Index ab = m.mul(a, b);
      for (Index c = 0; c < m.size(); ++c) {
        if (c == m.unit) continue;
        if (m.mul(ab, c) == mz.zero && ab != mz.zero &&
            m.mul(b, c) != mz.zero) {
          result.witness = TripleWitness{a, b, c};
          result.detail = fmt::format(
              "product of ({},{},{}) is zero but neither inner pair is",
              m.elements[a], m.elements[b], m.elements[c]);
          return result;
        }
      }
    }
  }
  result.holds = true;
  return result;
}

std::optional<CategoryIso> find_category_isomorphism(const FiniteCategory& k1,
                                                     const FiniteCategory& k2) {
  if (k1.objects.size() != k2.objects.size() ||
      k1.arrows.size() != k2.arrows.size()) {
    return std::nullopt;
  }
  const Index objs = k1.objects.size();
  const Index arrows = k1.arrows.size();

  std::vector<Index> object_map(objs);
  std::iota(object_map.begin(), object_map.end(), Index{0});
  do {
    // Arrow assignment by backtracking under the fixed object map.
    std::vector<Index> arrow_map(arrows, kUndefined);
    std::vector<bool> used(arrows, false);

    const auto compatible = [&](Index f, Index g) {
      if (k1.is_identity(f) != k2.is_identity(g)) {
        return false;
      }
      if (k1.is_identity(f)) {
        // Identities must pair along the object map.
        const Index obj = k1.arrows[f].dom;
        if (k2.identities[object_map[obj]] != g) {
          return false;
        }
      }
      return object_map[k1.arrows[f].dom] == k2.arrows[g].dom &&
             object_map[k1.arrows[f].cod] == k2.arrows[g].cod;
    };

    const auto composition_ok = [&] {
      for (Index f = 0; f < arrows; ++f) {
        for (Index g = 0; g < arrows; ++g) {
          const Index h = k1.compose(f, g);
          const Index h2 = k2.compose(arrow_map[f], arrow_map[g]);
          if ((h == kUndefined) != (h2 == kUndefined)) {
            return false;
          }
          if (h != kUndefined && arrow_map[h] != h2) {
            return false;
          }
        }
      }
      return true;
    };

    const auto search = [&](auto&& self, Index f) -> bool {
      if (f == arrows) {
        return composition_ok();
      }
      for (Index g = 0; g < arrows; ++g) {
        if (used[g] || !compatible(f, g)) {
          continue;
        }
        arrow_map[f] = g;
        used[g] = true;
        if (self(self, f + 1)) {
          return true;
        }
        used[g] = false;
        arrow_map[f] = kUndefined;
      }
      return false;
    };
    if (search(search, 0)) {
      return CategoryIso{object_map, arrow_map};
    }
  } while (std::next_permutation(object_map.begin(), object_map.end()));
  return std::nullopt;
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

FiniteCategory parse_category_file(std::istream& in, const std::string& filename) {
  FiniteCategory k;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  bool saw_order = false;
  bool saw_objects = false;

  struct ComposeLine {
    std::string f, g, h;
    int line_no;
  };
  std::vector<ComposeLine> compose_lines;
  std::vector<Index> identity_of(0);

  const auto object_index = [&](const std::string& name, int at) {
    for (Index i = 0; i < k.objects.size(); ++i) {
      if (k.objects[i] == name) {
        return i;
      }
    }
    throw ParseError(fmt::format("{}:{}: unknown object '{}'", filename, at, name),
                     at);
  };
  const auto arrow_index = [&](const std::string& name, int at) {
    for (Index i = 0; i < k.arrows.size(); ++i) {
      if (k.arrows[i].name == name) {
        return i;
      }
    }
    throw ParseError(fmt::format("{}:{}: unknown arrow '{}'", filename, at, name),
                     at);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "category") {
        throw ParseError(fmt::format("{}:{}: expected 'category <name>'",
                                     filename, line_no), line_no);
      }
      k.name = tokens[1];
      saw_header = true;
      continue;
    }
    if (!saw_order) {
      if (tokens.size() != 2 || tokens[0] != "order" ||
          tokens[1] != "diagrammatic") {
        throw ParseError(fmt::format("{}:{}: expected 'order diagrammatic'",
                                     filename, line_no), line_no);
      }
      saw_order = true;
      continue;
    }
    if (!saw_objects) {
      if (tokens[0] != "objects") {
        throw ParseError(fmt::format("{}:{}: expected 'objects <A> ...'",
                                     filename, line_no), line_no);
      }
      std::set<std::string> seen;
      for (Index i = 1; i < tokens.size(); ++i) {
        if (!seen.insert(tokens[i]).second) {
          throw ParseError(fmt::format("{}:{}: duplicate object '{}'",
                                       filename, line_no, tokens[i]), line_no);
        }
        k.objects.push_back(tokens[i]);
      }
      identity_of.assign(k.objects.size(), kUndefined);
      saw_objects = true;
      continue;
    }
    if (tokens[0] == "identity") {
      if (tokens.size() != 3) {
        throw ParseError(fmt::format("{}:{}: expected 'identity <arrow> <object>'",
                                     filename, line_no), line_no);
      }
      const Index obj = object_index(tokens[2], line_no);
      if (identity_of[obj] != kUndefined) {
        throw ParseError(fmt::format("{}:{}: object '{}' already has an identity",
                                     filename, line_no, tokens[2]), line_no);
      }
      identity_of[obj] = k.arrows.size();
      k.arrows.push_back(Arrow{tokens[1], obj, obj});
    } else if (tokens[0] == "arrow") {
      if (tokens.size() != 4) {
        throw ParseError(fmt::format("{}:{}: expected 'arrow <f> <dom> <cod>'",
                                     filename, line_no), line_no);
      }
      k.arrows.push_back(Arrow{tokens[1], object_index(tokens[2], line_no),
                               object_index(tokens[3], line_no)});
    } else if (tokens[0] == "compose") {
      if (tokens.size() != 5 || tokens[3] != "=") {
        throw ParseError(fmt::format("{}:{}: expected 'compose <f> <g> = <h>'",
                                     filename, line_no), line_no);
      }
      compose_lines.push_back({tokens[1], tokens[2], tokens[4], line_no});
    } else {
      throw ParseError(fmt::format("{}:{}: unknown directive '{}'", filename,
                                   line_no, tokens[0]), line_no);
    }
  }
  if (!saw_header || !saw_order || !saw_objects) {
    throw ParseError(fmt::format("{}:{}: unexpected end of file", filename, line_no),
                     line_no);
  }
  for (Index obj = 0; obj < k.objects.size(); ++obj) {
    if (identity_of[obj] == kUndefined) {
      throw ParseError(fmt::format("{}: object '{}' has no identity line",
                                   filename, k.objects[obj]));
    }
  }
  k.identities = identity_of;

  const Index n = k.arrows.size();
  k.composition.assign(n, std::vector<Index>(n, kUndefined));
  // Identity composites are inferred, non-identity ones come from the file.
  for (Index f = 0; f < n; ++f) {
    for (Index g = 0; g < n; ++g) {
      if (k.arrows[f].cod != k.arrows[g].dom) {
        continue;
      }
      if (k.is_identity(f)) {
        k.composition[f][g] = g;
      } else if (k.is_identity(g)) {
        k.composition[f][g] = f;
      }
    }
  }
  for (const auto& cl : compose_lines) {
    const Index f = arrow_index(cl.f, cl.line_no);
    const Index g = arrow_index(cl.g, cl.line_no);
    const Index h = arrow_index(cl.h, cl.line_no);
    if (k.is_identity(f) || k.is_identity(g)) {
      throw ParseError(
          fmt::format("{}:{}: identity composites are inferred, not declared",
                      filename, cl.line_no), cl.line_no);
    }
    k.composition[f][g] = h;
  }
  return k;
}

FiniteCategory parse_category_text(const std::string& text,
                                   const std::string& filename) {
  std::istringstream in(text);
  return parse_category_file(in, filename);
}

void print_category(std::ostream& out, const FiniteCategory& k) {
  out << "category " << k.name << "\n";
  out << "order diagrammatic\n";
  out << "objects";
  for (const auto& obj : k.objects) {
    out << ' ' << obj;
  }
  out << "\n";
  for (Index obj = 0; obj < k.objects.size(); ++obj) {
    out << "identity " << k.arrows[k.identities[obj]].name << ' '
        << k.objects[obj] << "\n";
  }
  for (Index f = 0; f < k.arrows.size(); ++f) {
    if (k.is_identity(f)) {
      continue;
    }
    out << "arrow " << k.arrows[f].name << ' ' << k.objects[k.arrows[f].dom]
        << ' ' << k.objects[k.arrows[f].cod] << "\n";
  }
  for (Index f = 0; f < k.arrows.size(); ++f) {
    for (Index g = 0; g < k.arrows.size(); ++g) {
      if (k.is_identity(f) || k.is_identity(g) ||
          k.compose(f, g) == kUndefined) {
        continue;
      }
      out << "compose " << k.arrows[f].name << ' ' << k.arrows[g].name << " = "
          << k.arrows[k.compose(f, g)].name << "\n";
    }
  }
}

}  // namespace monocat
