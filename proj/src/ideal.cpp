#include "monocat/ideal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

#include "monocat/bridge.hpp"
#include "monocat/errors.hpp"

namespace monocat {

namespace {

void require_admissible(const FiniteMonoid& m, const Subset& q) {
  if (q.empty()) {
    throw StructuralError("empty subset cannot be an ideal");
  }
  if (q.count(m.unit)) {
    throw StructuralError(
        "subset contains the unit; identifying it would trivialize the monoid");
  }
  for (Index i : q) {
    if (i >= m.size()) {
      throw StructuralError(fmt::format("subset member {} out of range", i));
    }
  }
}

}  // namespace

bool is_ideal(const FiniteMonoid& m, const Subset& q) {
  require_admissible(m, q);
  for (Index x : q) {
    for (Index y = 0; y < m.size(); ++y) {
      if (!q.count(m.mul(x, y)) || !q.count(m.mul(y, x))) {
        return false;
      }
    }
  }
  return true;
}

AssociativityCheck is_associative_ideal(const FiniteMonoid& m, const Subset& q) {
  require_admissible(m, q);
  AssociativityCheck result;
  for (Index a = 0; a < m.size(); ++a) {
    if (a == m.unit) continue;
    for (Index b = 0; b < m.size(); ++b) {
      if (b == m.unit) continue;
      const Index ab = m.mul(a, b);
      for (Index c = 0; c < m.size(); ++c) {
        if (c == m.unit) continue;
        if (q.count(m.mul(ab, c)) && !q.count(ab) && !q.count(m.mul(b, c))) {
          result.holds = false;
          result.witness = TripleWitness{a, b, c};
          return result;
        }
      }
    }
  }
  result.holds = true;
  return result;
}

PrimalityCheck is_prime_ideal(const FiniteMonoid& m, const Subset& q) {
  require_admissible(m, q);
  PrimalityCheck result;
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = 0; y < m.size(); ++y) {
      const bool product_in = q.count(m.mul(x, y)) > 0;
      const bool factor_in = q.count(x) > 0 || q.count(y) > 0;
      if (product_in != factor_in) {
        result.holds = false;
        result.witness = PairWitness{x, y, product_in};
        return result;
      }
    }
  }
  result.holds = true;
  return result;
}

Subset generated_ideal(const FiniteMonoid& m, const Subset& seed) {
  if (seed.empty()) {
    throw StructuralError("empty seed");
  }
  for (Index i : seed) {
    if (i >= m.size()) {
      throw StructuralError(fmt::format("seed member {} out of range", i));
    }
  }
  Subset closure = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index x : std::vector<Index>(closure.begin(), closure.end())) {
      for (Index y = 0; y < m.size(); ++y) {
        for (Index p : {m.mul(x, y), m.mul(y, x)}) {
          if (closure.insert(p).second) {
            grew = true;
          }
        }
      }
    }
  }
  if (closure.count(m.unit)) {
    throw StructuralError("seed generates the whole monoid");
  }
  return closure;
}

std::vector<ClassifiedIdeal> enumerate_associative_ideals(const FiniteMonoid& m,
                                                          Index order_cap) {
  if (m.size() > order_cap) {
    throw StructuralError(fmt::format("order {} exceeds the ideal-scan cap of {}",
                                      m.size(), order_cap));
  }
  std::vector<ClassifiedIdeal> found;
  const Index n = m.size();
  for (Index mask = 1; mask < (Index{1} << n); ++mask) {
    if (mask & (Index{1} << m.unit)) {
      continue;
    }
    Subset q;
    for (Index i = 0; i < n; ++i) {
      if (mask & (Index{1} << i)) {
        q.insert(i);
      }
    }
    if (!is_ideal(m, q) || !is_associative_ideal(m, q).holds) {
      continue;
    }
    found.push_back({q, is_prime_ideal(m, q).holds});
  }
  return found;
}

namespace {

std::string triple_text(const FiniteMonoid& m, const TripleWitness& w) {
  return fmt::format("({},{},{})", m.elements[w.a], m.elements[w.b],
                     m.elements[w.c]);
}

// A name not already used by any element in `taken`.
std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) {
    base += '\'';
  }
  return base;
}

}  // namespace

QuotientResult quotient_to_zero(const FiniteMonoid& m, const Subset& q) {
  if (!is_ideal(m, q)) {
    throw StructuralError("subset is not a two-sided ideal");
  }
  const auto assoc = is_associative_ideal(m, q);
  if (!assoc.holds) {
    throw StructuralError(fmt::format(
        "subset is not an associative ideal; witness triple {}",
        triple_text(m, *assoc.witness)));
  }

  QuotientResult result;
  std::vector<Index> kept;
  for (Index i = 0; i < m.size(); ++i) {
    if (!q.count(i)) {
      kept.push_back(i);
    }
  }
  std::vector<std::string> kept_names;
  for (Index i : kept) {
    kept_names.push_back(m.elements[i]);
  }
  const std::string zero_name = q.size() == 1 ? m.elements[*q.begin()]
                                              : fresh_name("0", kept_names);

  FiniteMonoid& quot = result.quotient;
  quot.name = m.name + "/0";
  quot.elements = kept_names;
  quot.elements.push_back(zero_name);
  result.zero = kept.size();

  std::vector<Index> to_new(m.size(), result.zero);
  for (Index pos = 0; pos < kept.size(); ++pos) {
    to_new[kept[pos]] = pos;
  }
  quot.unit = to_new[m.unit];
  quot.table.assign(quot.size(), std::vector<Index>(quot.size()));
  for (Index i = 0; i < quot.size(); ++i) {
    for (Index j = 0; j < quot.size(); ++j) {
      // Any representative works: products with the zero class land in q.
      const Index ri = i == result.zero ? *q.begin() : kept[i];
      const Index rj = j == result.zero ? *q.begin() : kept[j];
      quot.table[i][j] = to_new[m.mul(ri, rj)];
    }
  }

  result.projection = MonoidHom{m, quot, to_new};
  if (!verify_monoid(quot).ok() || !check_hom(result.projection).ok() ||
      !is_associative_ideal(quot, {result.zero}).holds) {
    throw StructuralError("internal error: quotient failed its own checks");
  }
  return result;
}

FiniteMonoid quotient_to_unit(const FiniteMonoid& m, const Subset& q) {
  if (!is_ideal(m, q)) {
    throw StructuralError("subset is not a two-sided ideal");
  }
  // Union-find over element indices.
  std::vector<Index> parent(m.size());
  std::iota(parent.begin(), parent.end(), Index{0});
  const auto find = [&](Index x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  const auto unite = [&](Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };
  for (Index x : q) {
    unite(m.unit, x);
  }
  // Congruence closure: equal pairs must have equal products.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = 0; i < m.size(); ++i) {
      for (Index i2 = 0; i2 < m.size(); ++i2) {
        if (find(i) != find(i2)) continue;
        for (Index j = 0; j < m.size(); ++j) {
          for (Index j2 = 0; j2 < m.size(); ++j2) {
            if (find(j) != find(j2)) continue;
            if (unite(m.mul(i, j), m.mul(i2, j2))) {
              changed = true;
            }
          }
        }
      }
    }
  }

  std::vector<Index> reps;
  std::vector<Index> to_class(m.size());
  for (Index i = 0; i < m.size(); ++i) {
    if (find(i) == i) {
      to_class[i] = reps.size();
      reps.push_back(i);
    }
  }
  for (Index i = 0; i < m.size(); ++i) {
    to_class[i] = to_class[find(i)];
  }

  FiniteMonoid quot;
  quot.name = m.name + "/unit";
  for (Index r : reps) {
    quot.elements.push_back(m.elements[r]);
  }
  quot.unit = to_class[m.unit];
  quot.table.assign(reps.size(), std::vector<Index>(reps.size()));
  for (Index i = 0; i < reps.size(); ++i) {
    for (Index j = 0; j < reps.size(); ++j) {
      quot.table[i][j] = to_class[m.mul(reps[i], reps[j])];
    }
  }
  return quot;
}

bool PushoutWitness::pass() const {
  if (!square_commutes) {
    return false;
  }
  for (const auto& record : corpus_report) {
    if (!record.mediator_exists || !record.mediator_unique) {
      return false;
    }
  }
  return true;
}

PushoutWitness verify_pushout(const FiniteMonoid& m, const Subset& q,
                              const std::vector<FiniteMonoid>& corpus) {
  const auto assoc = is_associative_ideal(m, q);
  if (!is_ideal(m, q) || !assoc.holds) {
    throw StructuralError("subset is not an associative ideal");
  }
  if (corpus.empty()) {
    throw StructuralError("empty verification corpus");
  }

  PushoutWitness w;

  // Corner monoid {E} u Q; it is closed because q absorbs.
  std::vector<Index> corner_members{m.unit};
  corner_members.insert(corner_members.end(), q.begin(), q.end());
  std::vector<Index> to_corner(m.size(), kUndefined);
  for (Index pos = 0; pos < corner_members.size(); ++pos) {
    to_corner[corner_members[pos]] = pos;
  }
  w.corner.name = "corner";
  for (Index i : corner_members) {
    w.corner.elements.push_back(m.elements[i]);
  }
  w.corner.unit = 0;
  w.corner.table.assign(corner_members.size(),
                        std::vector<Index>(corner_members.size()));
  for (Index i = 0; i < corner_members.size(); ++i) {
    for (Index j = 0; j < corner_members.size(); ++j) {
      w.corner.table[i][j] = to_corner[m.mul(corner_members[i], corner_members[j])];
    }
  }

  w.two_element.name = "unit-zero";
  w.two_element.elements = {"E", "0"};
  w.two_element.unit = 0;
  w.two_element.table = {{0, 1}, {1, 1}};

  w.inclusion = MonoidHom{w.corner, m, corner_members};
  std::vector<Index> collapse_map(corner_members.size(), 1);
  collapse_map[0] = 0;
  w.collapse = MonoidHom{w.corner, w.two_element, collapse_map};

  w.apex = quotient_to_zero(m, q);
  w.induced = MonoidHom{w.two_element, w.apex.quotient,
                        {w.apex.quotient.unit, w.apex.zero}};

  w.square_commutes = true;
  for (Index i = 0; i < corner_members.size(); ++i) {
    if (w.apex.projection.apply(w.inclusion.apply(i)) !=
        w.induced.apply(w.collapse.apply(i))) {
      w.square_commutes = false;
    }
  }

  const FiniteMonoid& quot = w.apex.quotient;
  for (const auto& x : corpus) {
    if (!verify_monoid(x).ok()) {
      throw StructuralError(fmt::format("corpus monoid '{}' is invalid", x.name));
    }
    CoconeRecord record;
    record.corpus_name = x.name;

    const auto homs_from_m = all_homs(m, x);
    const auto homs_from_two = all_homs(w.two_element, x);
    const auto maps_to_x = all_homs(quot, x);  // candidate mediators

    for (const auto& from_m : homs_from_m) {
      for (const auto& from_two : homs_from_two) {
        // Commuting cocone: all of q must meet the image of 0.
        bool commutes = true;
        for (Index member : q) {
          if (from_m[member] != from_two[1]) {
            commutes = false;
            break;
          }
        }
        if (!commutes) {
          continue;
        }
        ++record.cocone_pairs;

        std::size_t mediators = 0;
        for (const auto& r : maps_to_x) {
          bool fits = true;
          for (Index i = 0; i < m.size() && fits; ++i) {
            fits = r[w.apex.projection.apply(i)] == from_m[i];
          }
          for (Index i = 0; i < 2 && fits; ++i) {
            fits = r[w.induced.apply(i)] == from_two[i];
          }
          if (fits) {
            ++mediators;
          }
        }
        if (mediators == 0 && record.mediator_exists) {
          record.mediator_exists = false;
          record.detail = fmt::format("no mediator for cocone pair {}",
                                      record.cocone_pairs);
        }
        if (mediators > 1 && record.mediator_unique) {
          record.mediator_unique = false;
          record.detail = fmt::format("{} mediators for cocone pair {}",
                                      mediators, record.cocone_pairs);
        }
      }
    }
    w.corpus_report.push_back(std::move(record));
  }
  return w;
}

WeakSimplicityCheck weak_simplicity_check(const FiniteMonoid& m, const Subset& q,
                                          bool allow_unit_witness) {
  if (!is_ideal(m, q)) {
    throw StructuralError("subset is not a two-sided ideal");
  }
  Subset excluded;
  if (!allow_unit_witness) {
    excluded = local_units(m, q);  // always contains the unit
  }
  WeakSimplicityCheck result;
  for (Index x = 0; x < m.size(); ++x) {
    if (q.count(x)) {
      continue;
    }
    bool right = false;
    bool left = false;
    for (Index y = 0; y < m.size(); ++y) {
      if (q.count(y) || excluded.count(y)) {
        continue;
      }
      right = right || !q.count(m.mul(x, y));
      left = left || !q.count(m.mul(y, x));
    }
    if (!right || !left) {
      result.holds = false;
      result.failing = x;
      return result;
    }
  }
  result.holds = true;
  return result;
}

}  // namespace monocat
