#include "monocat/bridge.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "monocat/errors.hpp"

namespace monocat {

bool is_local_unit(const FiniteMonoid& m, const Subset& q, Index e) {
  if (e == m.unit) {
    return true;
  }
  bool acts_somewhere = false;
  for (Index x = 0; x < m.size(); ++x) {
    if (x == m.unit) {
      continue;
    }
    const Index ex = m.mul(e, x);
    const Index xe = m.mul(x, e);
    if (!q.count(ex)) {
      if (ex != x) {
        return false;
      }
      acts_somewhere = true;
    }
    if (!q.count(xe)) {
      if (xe != x) {
        return false;
      }
      acts_somewhere = true;
    }
  }
  return acts_somewhere;
}

Subset local_units(const FiniteMonoid& m, const Subset& q) {
  Subset units;
  for (Index e = 0; e < m.size(); ++e) {
    if (is_local_unit(m, q, e)) {
      units.insert(e);
    }
  }
  return units;
}

CoverageCheck check_unit_coverage(const FiniteMonoid& m, const Subset& q,
                                  bool include_global_unit) {
  const Subset units = local_units(m, q);
  CoverageCheck result;
  for (Index x = 0; x < m.size(); ++x) {
    if (q.count(x) || (!include_global_unit && x == m.unit)) {
      continue;
    }
    bool left = false;
    bool right = false;
    for (Index e : units) {
      if (!include_global_unit && e == m.unit) {
        continue;
      }
      left = left || !q.count(m.mul(e, x));
      right = right || !q.count(m.mul(x, e));
    }
    if (!left || !right) {
      result.holds = false;
      result.uncovered = x;
      return result;
    }
  }
  result.holds = true;
  return result;
}

ExtendedMonoid adjoin_local_unit(const FiniteMonoid& m, const Subset& q) {
  const auto assoc = is_associative_ideal(m, q);
  if (!is_ideal(m, q) || !assoc.holds) {
    throw StructuralError("subset is not an associative ideal");
  }

  ExtendedMonoid ext;
  ext.ideal = q;
  FiniteMonoid& big = ext.monoid;
  big.name = m.name + "+unit";
  big.elements = m.elements;

  std::string fresh = "u";
  while (std::find(big.elements.begin(), big.elements.end(), fresh) !=
         big.elements.end()) {
    fresh += '\'';
  }
  big.elements.push_back(fresh);
  ext.fresh_unit = m.size();
  big.unit = ext.fresh_unit;

  big.table.assign(big.size(), std::vector<Index>(big.size()));
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) {
      big.table[i][j] = m.table[i][j];
    }
  }
  for (Index i = 0; i < big.size(); ++i) {
    big.table[ext.fresh_unit][i] = big.table[i][ext.fresh_unit] = i;
  }
  return ext;
}

ValidationReport verify_partial_structure(const PartialCompositionStructure& p) {
  ValidationReport report;
  const Index n = p.size();
  if (p.product.size() != n) {
    report.structural.push_back("product table size does not match the carrier");
    return report;
  }
  for (const auto& row : p.product) {
    if (row.size() != n) {
      report.structural.push_back("product table size does not match the carrier");
      return report;
    }
    for (Index entry : row) {
      if (entry != kUndefined && entry >= n) {
        report.structural.push_back("product entry out of range");
        return report;
      }
    }
  }
  for (Index e : p.local_units) {
    if (e >= n) {
      report.structural.push_back("local unit out of range");
      return report;
    }
  }

  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!p.defined(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (!p.defined(b, c)) continue;
        const Index ab = p.product[a][b];
        const Index bc = p.product[b][c];
        if (!p.defined(ab, c) || !p.defined(a, bc) ||
            p.product[ab][c] != p.product[a][bc]) {
          report.violations.push_back(fmt::format(
              "weak associativity fails at ({},{},{})", p.carrier[a],
              p.carrier[b], p.carrier[c]));
        }
      }
    }
  }
  for (Index e : p.local_units) {
    bool acts = false;
    for (Index x = 0; x < n; ++x) {
      if (p.defined(e, x)) {
        acts = true;
        if (p.product[e][x] != x) {
          report.violations.push_back(fmt::format(
              "'{}' is marked a local unit but {} * {} = {}", p.carrier[e],
              p.carrier[e], p.carrier[x], p.carrier[p.product[e][x]]));
        }
      }
      if (p.defined(x, e)) {
        acts = true;
        if (p.product[x][e] != x) {
          report.violations.push_back(fmt::format(
              "'{}' is marked a local unit but {} * {} = {}", p.carrier[e],
              p.carrier[x], p.carrier[e], p.carrier[p.product[x][e]]));
        }
      }
    }
    if (!acts) {
      report.violations.push_back(fmt::format(
          "'{}' is marked a local unit but has no defined products",
          p.carrier[e]));
    }
  }
  return report;
}

PartialCompositionStructure monoid_to_partial(const FiniteMonoid& m,
                                              const Subset& q) {
  const auto assoc = is_associative_ideal(m, q);
  if (!is_ideal(m, q) || !assoc.holds) {
    std::string detail = "subset is not an associative ideal";
    if (assoc.witness) {
      detail += fmt::format("; witness triple ({},{},{})",
                            m.elements[assoc.witness->a],
                            m.elements[assoc.witness->b],
                            m.elements[assoc.witness->c]);
    }
    throw StructuralError(detail);
  }

  std::vector<Index> members;
  std::vector<Index> to_carrier(m.size(), kUndefined);
  for (Index i = 0; i < m.size(); ++i) {
    if (i != m.unit && !q.count(i)) {
      to_carrier[i] = members.size();
      members.push_back(i);
    }
  }
  for (Index a : members) {
    for (Index b : members) {
      const Index p = m.mul(a, b);
      if (!q.count(p) && p == m.unit) {
        throw StructuralError(fmt::format(
            "product {} * {} is the global unit, which has no place in the "
            "carrier", m.elements[a], m.elements[b]));
      }
    }
  }

  PartialCompositionStructure partial;
  for (Index i : members) {
    partial.carrier.push_back(m.elements[i]);
  }
  partial.product.assign(members.size(), std::vector<Index>(members.size(),
                                                            kUndefined));
  for (Index a = 0; a < members.size(); ++a) {
    for (Index b = 0; b < members.size(); ++b) {
      const Index p = m.mul(members[a], members[b]);
      if (!q.count(p)) {
        partial.product[a][b] = to_carrier[p];
      }
    }
  }
  // Carrier-internal local units; agrees with local_units minus the unit.
  for (Index e = 0; e < members.size(); ++e) {
    bool acts = false;
    bool identical = true;
    for (Index x = 0; x < members.size() && identical; ++x) {
      if (partial.defined(e, x)) {
        acts = true;
        identical = partial.product[e][x] == x;
      }
      if (identical && partial.defined(x, e)) {
        acts = true;
        identical = partial.product[x][e] == x;
      }
    }
    if (acts && identical) {
      partial.local_units.insert(e);
    }
  }

  const auto self_check = verify_partial_structure(partial);
  if (!self_check.ok()) {
    throw StructuralError(fmt::format("internal error: partial structure "
                                      "failed its own checks: {}",
                                      self_check.violations.front()));
  }
  return partial;
}

CategoryRecovery partial_to_category(const PartialCompositionStructure& p) {
  CategoryRecovery recovery;
  const Index n = p.size();

  std::vector<Index> left_unit(n, kUndefined);
  std::vector<Index> right_unit(n, kUndefined);
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> lefts;
    std::vector<Index> rights;
    for (Index e : p.local_units) {
      if (p.defined(e, x)) {
        lefts.push_back(e);
      }
      if (p.defined(x, e)) {
        rights.push_back(e);
      }
    }
    if (lefts.empty()) {
      recovery.diagnosis =
          fmt::format("'{}' has no left local unit in the carrier", p.carrier[x]);
      return recovery;
    }
    if (lefts.size() > 1) {
      recovery.diagnosis = fmt::format(
          "'{}' has {} left local units in the carrier", p.carrier[x],
          lefts.size());
      return recovery;
    }
    if (rights.empty()) {
      recovery.diagnosis =
          fmt::format("'{}' has no right local unit in the carrier", p.carrier[x]);
      return recovery;
    }
    if (rights.size() > 1) {
      recovery.diagnosis = fmt::format(
          "'{}' has {} right local units in the carrier", p.carrier[x],
          rights.size());
      return recovery;
    }
    left_unit[x] = lefts.front();
    right_unit[x] = rights.front();
  }

  FiniteCategory k;
  k.name = "recovered";
  std::vector<Index> object_of(n, kUndefined);
  for (Index e : p.local_units) {
    object_of[e] = k.objects.size();
    k.objects.push_back(p.carrier[e]);
    k.identities.push_back(e);  // arrows are carrier elements, same indexing
  }
  for (Index x = 0; x < n; ++x) {
    k.arrows.push_back(Arrow{p.carrier[x], object_of[left_unit[x]],
                             object_of[right_unit[x]]});
  }
  k.composition = p.product;

  const auto report = verify_category(k);
  if (!report.ok()) {
    recovery.diagnosis = fmt::format(
        "weak category only: {}", report.structural.empty()
                                      ? report.violations.front()
                                      : report.structural.front());
    return recovery;
  }
  recovery.category = std::move(k);
  return recovery;
}

// ---------------------------------------------------------------------
// Correspondence relation

bool CorrespondenceReport::pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseReport& c) { return c.pass; });
}

namespace {

// Total product on the completed category side: the big unit acts
// identically, the sink absorbs, arrows compose where composable and
// fall to the sink otherwise.
Index completed_compose(const FiniteCategory& k, Index big_unit, Index sink,
                        Index x, Index y) {
  if (x == big_unit) return y;
  if (y == big_unit) return x;
  if (x == sink || y == sink) return sink;
  const Index h = k.compose(x, y);
  return h == kUndefined ? sink : h;
}

}  // namespace

CorrespondenceReport build_and_verify_correspondence(const FiniteMonoid& m,
                                                     const Subset& q,
                                                     const FiniteCategory& k) {
  if (!is_ideal(m, q) || !is_associative_ideal(m, q).holds) {
    throw StructuralError("subset is not an associative ideal");
  }
  if (!verify_category(k).ok()) {
    throw StructuralError("category fails verification");
  }

  CorrespondenceReport report;
  CorrespondenceR& rel = report.relation;
  const Index arrows = k.arrows.size();
  rel.big_unit = arrows;
  rel.sink = arrows + 1;

  const auto arrow_named = [&](const std::string& name) -> std::optional<Index> {
    for (Index i = 0; i < arrows; ++i) {
      if (k.arrows[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  };

  rel.pairs.emplace_back(m.unit, rel.big_unit);
  for (Index member : q) {
    rel.pairs.emplace_back(member, rel.sink);
  }
  for (Index i = 0; i < m.size(); ++i) {
    if (i == m.unit || q.count(i)) {
      continue;
    }
    if (auto partner = arrow_named(m.elements[i])) {
      rel.pairs.emplace_back(i, *partner);
    }
  }

  const auto partners_of = [&](Index element) {
    std::vector<Index> out;
    for (const auto& [a, x] : rel.pairs) {
      if (a == element) {
        out.push_back(x);
      }
    }
    return out;
  };
  const auto related = [&](Index element, Index side) {
    return std::any_of(rel.pairs.begin(), rel.pairs.end(), [&](const auto& p) {
      return p.first == element && p.second == side;
    });
  };

  // Clause: every monoid element has a partner.
  {
    ClauseReport c{"totality", true, ""};
    for (Index i = 0; i < m.size(); ++i) {
      if (partners_of(i).empty()) {
        c.pass = false;
        c.detail = fmt::format("'{}' has no partner", m.elements[i]);
        break;
      }
    }
    report.clauses.push_back(c);
  }
  // Clause: the unit pairs with the big unit and nothing else.
  {
    ClauseReport c{"unit-to-big-unit", false, ""};
    const auto ps = partners_of(m.unit);
    c.pass = ps.size() == 1 && ps.front() == rel.big_unit;
    if (!c.pass) {
      c.detail = fmt::format("unit has {} partners", ps.size());
    }
    report.clauses.push_back(c);
  }
  // Clause: each ideal member pairs with the sink and nothing else.
  {
    ClauseReport c{"ideal-to-sink", true, ""};
    for (Index member : q) {
      const auto ps = partners_of(member);
      if (ps.size() != 1 || ps.front() != rel.sink) {
        c.pass = false;
        c.detail = fmt::format("'{}' is not collapsed to the sink alone",
                               m.elements[member]);
        break;
      }
    }
    report.clauses.push_back(c);
  }
  // Clause: the remaining elements biject with the arrows.
  {
    ClauseReport c{"arrow-bijection", true, ""};
    std::vector<bool> hit(arrows, false);
    Index carrier_count = 0;
    for (Index i = 0; i < m.size() && c.pass; ++i) {
      if (i == m.unit || q.count(i)) {
        continue;
      }
      ++carrier_count;
      const auto ps = partners_of(i);
      if (ps.size() != 1 || ps.front() >= arrows) {
        c.pass = false;
        c.detail = fmt::format("'{}' has no unique arrow partner",
                               m.elements[i]);
        break;
      }
      if (hit[ps.front()]) {
        c.pass = false;
        c.detail = fmt::format("arrow '{}' has two partners",
                               k.arrows[ps.front()].name);
        break;
      }
      hit[ps.front()] = true;
    }
    if (c.pass) {
      for (Index g = 0; g < arrows; ++g) {
        if (!hit[g]) {
          c.pass = false;
          c.detail = fmt::format("{} carrier elements against {} arrows; "
                                 "arrow '{}' unmatched",
                                 carrier_count, arrows, k.arrows[g].name);
          break;
        }
      }
    }
    report.clauses.push_back(c);
  }
  // Clause: local units correspond to identity arrows both ways.
  {
    ClauseReport c{"local-units", true, ""};
    const Subset units = local_units(m, q);
    for (Index e : units) {
      if (e == m.unit) {
        continue;  // pairs with the big unit, handled above
      }
      const auto ps = partners_of(e);
      if (ps.size() != 1 || ps.front() >= arrows ||
          !k.is_identity(ps.front())) {
        c.pass = false;
        c.detail = fmt::format("local unit '{}' does not pair with an "
                               "identity arrow", m.elements[e]);
        break;
      }
    }
    if (c.pass) {
      for (Index id : k.identities) {
        bool matched = false;
        for (const auto& [a, x] : rel.pairs) {
          if (x == id && units.count(a)) {
            matched = true;
            break;
          }
        }
        if (!matched) {
          c.pass = false;
          c.detail = fmt::format("identity arrow '{}' has no local-unit "
                                 "partner", k.arrows[id].name);
          break;
        }
      }
    }
    report.clauses.push_back(c);
  }
  // Clause: the relation respects the two total products.
  {
    ClauseReport c{"product-preservation", true, ""};
    for (const auto& [a, x] : rel.pairs) {
      for (const auto& [b, y] : rel.pairs) {
        const Index ab = m.mul(a, b);
        const Index xy = completed_compose(k, rel.big_unit, rel.sink, x, y);
        if (!related(ab, xy)) {
          c.pass = false;
          c.detail = fmt::format("({} , {}) maps outside the relation",
                                 m.elements[a], m.elements[b]);
          break;
        }
      }
      if (!c.pass) {
        break;
      }
    }
    report.clauses.push_back(c);
  }
  return report;
}

}  // namespace monocat
