#include "ordcalc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ordcalc/error.hpp"

namespace ordcalc {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  FiniteGroup g;
  g.n_ = n;
  g.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw ValidationError("group table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int c = table[a][b];
      if (c < 0 || c >= n) throw ValidationError("group table entry out of range at (" + std::to_string(a) +
                                                 "," + std::to_string(b) + ")");
      g.mul_[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  g.id_ = -1;
  for (int e = 0; e < n && g.id_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.id_ = e;
  }
  if (g.id_ < 0) throw ValidationError("group table has no two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("group table is not associative on (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) g.inv_[a] = b;
    if (g.inv_[a] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n) {
    throw ValidationError("label count does not match group order");
  }
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& gens) {
  using Perm = std::vector<int>;
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw ValidationError("permutation has wrong length");
    std::vector<char> seen(degree, 0);
    for (int x : p) {
      if (x < 0 || x >= degree || seen[x]) throw ValidationError("generator is not a permutation");
      seen[x] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  auto compose = [&](const Perm& a, const Perm& b) {  // a after b
    Perm r(degree);
    for (int x = 0; x < degree; ++x) r[x] = a[b[x]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Perm q = compose(elems[i], s);
      if (!index.count(q)) {
        index[q] = static_cast<int>(elems.size());
        elems.push_back(q);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    std::string l = "(";
    for (int x = 0; x < degree; ++x) l += (x ? " " : "") + std::to_string(elems[a][x]);
    labels.push_back(l + ")");
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n <= 1) return trivial();
  std::vector<int> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
  return from_permutations(n, {swap, cycle});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return from_table(std::move(t), std::move(labels));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_central(int a) const {
  for (int x = 0; x < n_; ++x)
    if (mul(a, x) != mul(x, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elements) const {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(label(elements[a]));
    for (int b = 0; b < n; ++b) {
      auto it = pos.find(mul(elements[a], elements[b]));
      if (it == pos.end()) throw ValidationError("subset is not closed under multiplication");
      t[a][b] = it->second;
    }
  }
  return from_table(std::move(t), std::move(labels));
}

void TimeReversalTag::validate(const FiniteGroup& g) const {
  if (static_cast<int>(orientation.size()) != g.order())
    throw ValidationError("time-reversal table has wrong length");
  for (int a = 0; a < g.order(); ++a) {
    if (orientation[a] > 1) throw ValidationError("time-reversal entries must be 0 or 1");
    for (int b = 0; b < g.order(); ++b)
      if (orientation[g.mul(a, b)] != (orientation[a] ^ orientation[b]))
        throw ValidationError("time-reversal table is not a homomorphism at (" + g.label(a) + "," +
                              g.label(b) + ")");
  }
}

TimeReversalTag TimeReversalTag::trivial(const FiniteGroup& g) {
  return {std::vector<std::uint8_t>(g.order(), 0)};
}

void GSet::validate(const FiniteGroup& g) const {
  if (points < 0 || act.size() != static_cast<std::size_t>(g.order()) * points)
    throw ValidationError("action table has wrong size");
  for (int x = 0; x < points; ++x) {
    if (apply(g.identity(), x) != x) throw ValidationError("identity does not fix point " + std::to_string(x));
    for (int a = 0; a < g.order(); ++a) {
      int y = apply(a, x);
      if (y < 0 || y >= points) throw ValidationError("action table entry out of range");
    }
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int x = 0; x < points; ++x)
        if (apply(a, apply(b, x)) != apply(g.mul(a, b), x))
          throw ValidationError("action axiom fails for (" + g.label(a) + "," + g.label(b) + ") at point " +
                                std::to_string(x));
}

GSet GSet::fixed_points(const FiniteGroup& g, int n) {
  GSet s;
  s.points = n;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < n; ++x) s.act.push_back(x);
  return s;
}

GSet GSet::regular(const FiniteGroup& g) {
  GSet s;
  s.points = g.order();
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) s.act.push_back(g.mul(a, x));
  return s;
}

FiniteGroupoid FiniteGroupoid::discrete(int n) {
  FiniteGroupoid g;
  for (int i = 0; i < n; ++i) g.components.push_back({FiniteGroup::trivial(), 1});
  return g;
}

FiniteGroupoid FiniteGroupoid::from_presentation(int objects, const std::vector<std::pair<int, int>>& morphisms,
                                                 const std::vector<int>& identities,
                                                 const std::vector<std::vector<int>>& compose) {
  const int m = static_cast<int>(morphisms.size());
  if (objects <= 0) throw ValidationError("groupoid needs at least one object");
  for (auto [s, t] : morphisms)
    if (s < 0 || t < 0 || s >= objects || t >= objects) throw ValidationError("morphism endpoint out of range");
  if (static_cast<int>(identities.size()) != objects) throw ValidationError("one identity per object required");
  for (int x = 0; x < objects; ++x) {
    int f = identities[x];
    if (f < 0 || f >= m || morphisms[f].first != x || morphisms[f].second != x)
      throw ValidationError("identity of object " + std::to_string(x) + " is not an endomorphism of it");
  }
  std::vector<int> comp(static_cast<std::size_t>(m) * m, -1);
  for (const auto& c : compose) {
    if (c.size() != 3) throw ValidationError("compose entries are triples (f, g, f-then-g)");
    int f = c[0], g = c[1], h = c[2];
    if (f < 0 || g < 0 || h < 0 || f >= m || g >= m || h >= m) throw ValidationError("compose index out of range");
    if (morphisms[f].second != morphisms[g].first) throw ValidationError("compose entry for non-composable pair");
    if (morphisms[h].first != morphisms[f].first || morphisms[h].second != morphisms[g].second)
      throw ValidationError("composite has wrong endpoints");
    comp[static_cast<std::size_t>(f) * m + g] = h;
  }
  for (int x = 0; x < objects; ++x) {
    int e = identities[x];
    for (int f = 0; f < m; ++f) {
      if (morphisms[f].second == x && comp[static_cast<std::size_t>(f) * m + e] != f)
        throw ValidationError("right unit law fails");
      if (morphisms[f].first == x && comp[static_cast<std::size_t>(e) * m + f] != f)
        throw ValidationError("left unit law fails");
    }
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (morphisms[f].second != morphisms[g].first) continue;
      if (comp[static_cast<std::size_t>(f) * m + g] < 0) throw ValidationError("composition table is partial");
    }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int fg = comp[static_cast<std::size_t>(f) * m + g];
      if (fg < 0) continue;
      for (int h = 0; h < m; ++h) {
        int gh = comp[static_cast<std::size_t>(g) * m + h];
        if (gh < 0) continue;
        if (comp[static_cast<std::size_t>(fg) * m + h] != comp[static_cast<std::size_t>(f) * m + gh])
          throw ValidationError("composition is not associative");
      }
    }
  for (int f = 0; f < m; ++f) {
    bool inv = false;
    for (int g = 0; g < m && !inv; ++g) {
      int a = comp[static_cast<std::size_t>(f) * m + g];
      int b = comp[static_cast<std::size_t>(g) * m + f];
      inv = a >= 0 && b >= 0 && a == identities[morphisms[f].first] && b == identities[morphisms[f].second];
    }
    if (!inv) throw ValidationError("morphism " + std::to_string(f) + " is not invertible");
  }
  // components via union-find
  std::vector<int> parent(objects);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [s, t] : morphisms) parent[find(s)] = find(t);
  std::map<int, std::vector<int>> classes;
  for (int x = 0; x < objects; ++x) classes[find(x)].push_back(x);
  std::vector<std::vector<int>> sorted;
  for (auto& [r, v] : classes) sorted.push_back(v);
  std::sort(sorted.begin(), sorted.end());
  FiniteGroupoid out;
  for (const auto& cls : sorted) {
    int base = cls.front();
    std::vector<int> aut{identities[base]};
    for (int f = 0; f < m; ++f)
      if (morphisms[f].first == base && morphisms[f].second == base && f != identities[base]) aut.push_back(f);
    const int n = static_cast<int>(aut.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[aut[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = pos.at(comp[static_cast<std::size_t>(aut[a]) * m + aut[b]]);
    out.components.push_back({FiniteGroup::from_table(std::move(t)), static_cast<int>(cls.size())});
  }
  return out;
}

ActionGroupoid action_groupoid(const GSet& x, const FiniteGroup& g) {
  x.validate(g);
  ActionGroupoid out;
  std::vector<char> seen(x.points, 0);
  for (int p = 0; p < x.points; ++p) {
    if (seen[p]) continue;
    std::vector<int> orbit;
    for (int a = 0; a < g.order(); ++a) {
      int q = x.apply(a, p);
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<int> stab{g.identity()};
    for (int a = 0; a < g.order(); ++a)
      if (a != g.identity() && x.apply(a, p) == p) stab.push_back(a);
    out.groupoid.components.push_back({g.subgroup(stab), static_cast<int>(orbit.size())});
    out.representatives.push_back(p);
    out.stabilizer_embedding.push_back(stab);
    out.orbits.push_back(orbit);
  }
  return out;
}

SupergroupReport validate_supergroup(const SuperGroup& sg) {
  const FiniteGroup& g = sg.group;
  if (sg.eps < 0 || sg.eps >= g.order()) throw ValidationError("eps is not an element of the group");
  if (g.mul(sg.eps, sg.eps) != g.identity())
    throw ValidationError("eps has order > 2: eps*eps = " + g.label(g.mul(sg.eps, sg.eps)));
  for (int a = 0; a < g.order(); ++a)
    if (g.mul(a, sg.eps) != g.mul(sg.eps, a))
      throw ValidationError("eps is not central: it does not commute with element " + g.label(a));
  SupergroupReport rep;
  rep.eps_trivial = sg.eps == g.identity();
  if (rep.eps_trivial) {
    rep.quotient = g;
    rep.projection.resize(g.order());
    std::iota(rep.projection.begin(), rep.projection.end(), 0);
    rep.section = rep.projection;
    return rep;
  }
  // cosets {a, a*eps}; identity coset first, then by smallest member
  std::vector<int> reps{g.identity()};
  for (int a = 0; a < g.order(); ++a) {
    if (a == g.identity() || a == sg.eps) continue;
    int b = g.mul(a, sg.eps);
    if (a < b) reps.push_back(a);
  }
  std::sort(reps.begin() + 1, reps.end());
  const int q = static_cast<int>(reps.size());
  rep.projection.assign(g.order(), -1);
  for (int i = 0; i < q; ++i) {
    rep.projection[reps[i]] = i;
    rep.projection[g.mul(reps[i], sg.eps)] = i;
  }
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  std::vector<std::string> labels;
  rep.extension.assign(static_cast<std::size_t>(q) * q, 0);
  for (int a = 0; a < q; ++a) {
    labels.push_back("[" + g.label(reps[a]) + "]");
    for (int b = 0; b < q; ++b) {
      int prod = g.mul(reps[a], reps[b]);
      t[a][b] = rep.projection[prod];
      rep.extension[static_cast<std::size_t>(a) * q + b] = prod == reps[t[a][b]] ? 0 : 1;
    }
  }
  rep.quotient = FiniteGroup::from_table(std::move(t), std::move(labels));
  rep.section = reps;
  return rep;
}

}  // namespace ordcalc
