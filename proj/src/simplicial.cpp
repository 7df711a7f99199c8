#include "ordcalc/simplicial.hpp"

#include <algorithm>
#include <array>

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

constexpr int kMaxDim = 31;

std::uint32_t low_bits(int v) { return v >= 32 ? 0xFFFFFFFFu : ((1u << v) - 1u); }

// Delete the bit positions in `drop` from `mask`, shifting higher bits down.
std::uint32_t remove_bits(std::uint32_t mask, std::uint32_t drop, int width) {
  std::uint32_t out = 0;
  int o = 0;
  for (int j = 0; j < width; ++j) {
    if (drop >> j & 1u) continue;
    if (mask >> j & 1u) out |= 1u << o;
    ++o;
  }
  return out;
}

void masks_with_popcount(int width, int r, std::vector<std::uint32_t>& out) {
  out.clear();
  for (std::uint32_t m = 0; m < (1u << width); ++m)
    if (__builtin_popcount(m) == r) out.push_back(m);
}

}  // namespace

std::string SimplicialModel::describe(int k, std::int64_t idx) const {
  return std::to_string(k) + ":" + std::to_string(idx);
}

std::shared_ptr<void> SimplicialModel::memo(const std::string& key,
                                            const std::function<std::shared_ptr<void>()>& make) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::shared_ptr<void> v = make();
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(key, v);
  return it->second;
}

Simplex SimplicialModel::face(int k, std::int64_t idx, int j) const {
  if (k <= 0 || j < 0 || j > k) throw std::invalid_argument("face index out of range");
  std::array<int, kMaxDim + 1> v{};
  int n = 0;
  for (int i = 0; i <= k; ++i)
    if (i != j) v[n++] = i;
  return restrict(k, idx, std::span<const int>(v.data(), n));
}

Simplex restrict_simplex(const SimplicialModel& m, const Simplex& s, std::span<const int> vertices) {
  const int out_dim = static_cast<int>(vertices.size()) - 1;
  if (!s.degenerate()) {
    if (out_dim == s.dim) return s;
    return m.restrict(s.dim, s.index, vertices);
  }
  const int bd = s.base_dim();
  std::array<int, kMaxDim + 1> img{}, w{}, pos{};
  int nw = 0;
  for (int j = 0; j <= out_dim; ++j) {
    int v = vertices[j];
    img[j] = v - __builtin_popcount(s.collapsed & low_bits(v));
    if (nw == 0 || w[nw - 1] != img[j]) w[nw++] = img[j];
    pos[j] = nw - 1;
  }
  Simplex r = nw == bd + 1 ? Simplex{bd, s.index, 0}
                           : m.restrict(bd, s.index, std::span<const int>(w.data(), nw));
  std::uint32_t bits = 0;
  auto q = [&](int j) { return pos[j] - __builtin_popcount(r.collapsed & low_bits(pos[j])); };
  for (int j = 0; j < out_dim; ++j)
    if (q(j) == q(j + 1)) bits |= 1u << j;
  return Simplex{out_dim, r.index, bits};
}

std::optional<std::string> SimplicialComplexTrunc::check_simplicial_identities() const {
  const SimplicialModel& m = *model_;
  std::array<int, kMaxDim + 1> v{};
  for (int k = 2; k <= trunc(); ++k) {
    for (std::int64_t idx = 0; idx < m.count(k); ++idx) {
      std::vector<Simplex> faces(k + 1);
      for (int j = 0; j <= k; ++j) faces[j] = m.face(k, idx, j);
      for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < j; ++i) {
          int n = 0;
          for (int t = 0; t < k; ++t)
            if (t != i) v[n++] = t;
          Simplex lhs = restrict_simplex(m, faces[j], std::span<const int>(v.data(), n));
          n = 0;
          for (int t = 0; t < k; ++t)
            if (t != j - 1) v[n++] = t;
          Simplex rhs = restrict_simplex(m, faces[i], std::span<const int>(v.data(), n));
          if (!(lhs == rhs))
            return "d" + std::to_string(i) + " d" + std::to_string(j) + " != d" + std::to_string(j - 1) + " d" +
                   std::to_string(i) + " on " + m.describe(k, idx);
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FiniteCategory FiniteCategory::from_group(const FiniteGroup& g) {
  FiniteCategory c;
  c.objects = 1;
  const int m = g.order();
  c.src.assign(m, 0);
  c.tgt.assign(m, 0);
  c.identity = {g.identity()};
  c.compose.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) c.compose[static_cast<std::size_t>(a) * m + b] = g.mul(a, b);
  c.label.resize(m);
  for (int a = 0; a < m; ++a) c.label[a] = a;
  c.names = g.labels();
  return c;
}

FiniteCategory FiniteCategory::from_groupoid(const FiniteGroupoid& gpd) {
  FiniteCategory c;
  c.objects = gpd.component_count();
  std::vector<int> base;
  int total = 0;
  for (const auto& comp : gpd.components) {
    base.push_back(total);
    total += comp.automorphisms.order();
  }
  c.compose.assign(static_cast<std::size_t>(total) * total, -1);
  for (int o = 0; o < c.objects; ++o) {
    const FiniteGroup& g = gpd.components[o].automorphisms;
    for (int a = 0; a < g.order(); ++a) {
      c.src.push_back(o);
      c.tgt.push_back(o);
      c.label.push_back(a);
      c.names.push_back(std::to_string(o) + ":" + g.label(a));
      for (int b = 0; b < g.order(); ++b)
        c.compose[static_cast<std::size_t>(base[o] + a) * total + base[o] + b] = base[o] + g.mul(a, b);
    }
    c.identity.push_back(base[o] + g.identity());
  }
  return c;
}

FiniteCategory FiniteCategory::cylinder(const FiniteCategory& x, const FiniteCategory& y,
                                        const std::vector<int>& fo, const std::vector<int>& fm) {
  FiniteCategory c;
  const int mx = x.morphisms(), my = y.morphisms();
  c.objects = x.objects + y.objects;
  for (int f = 0; f < mx; ++f) {
    c.src.push_back(x.src[f]);
    c.tgt.push_back(x.tgt[f]);
  }
  for (int h = 0; h < my; ++h) {
    c.src.push_back(x.objects + y.src[h]);
    c.tgt.push_back(x.objects + y.tgt[h]);
  }
  // bridges
  std::vector<std::vector<int>> bridge(x.objects, std::vector<int>(my, -1));
  std::vector<std::pair<int, int>> bridge_data;
  for (int a = 0; a < x.objects; ++a)
    for (int h = 0; h < my; ++h)
      if (y.src[h] == fo[a]) {
        bridge[a][h] = static_cast<int>(c.src.size());
        bridge_data.push_back({a, h});
        c.src.push_back(a);
        c.tgt.push_back(x.objects + y.tgt[h]);
      }
  const int m = static_cast<int>(c.src.size());
  c.compose.assign(static_cast<std::size_t>(m) * m, -1);
  auto set = [&](int f, int g, int h) { c.compose[static_cast<std::size_t>(f) * m + g] = h; };
  for (int f = 0; f < mx; ++f)
    for (int g = 0; g < mx; ++g)
      if (x.then(f, g) >= 0) set(f, g, x.then(f, g));
  for (int f = 0; f < my; ++f)
    for (int g = 0; g < my; ++g)
      if (y.then(f, g) >= 0) set(mx + f, mx + g, mx + y.then(f, g));
  for (std::size_t b = 0; b < bridge_data.size(); ++b) {
    auto [a, h] = bridge_data[b];
    const int id = mx + my + static_cast<int>(b);
    for (int f = 0; f < mx; ++f)
      if (x.tgt[f] == a) set(f, id, bridge[x.src[f]][y.then(fm[f], h)]);
    for (int k = 0; k < my; ++k)
      if (y.src[k] == y.tgt[h]) set(id, mx + k, bridge[a][y.then(h, k)]);
  }
  for (int o = 0; o < x.objects; ++o) c.identity.push_back(x.identity[o]);
  for (int o = 0; o < y.objects; ++o) c.identity.push_back(mx + y.identity[o]);
  if (!y.label.empty()) {
    for (int f = 0; f < mx; ++f) c.label.push_back(y.label[fm[f]]);
    for (int h = 0; h < my; ++h) c.label.push_back(y.label[h]);
    for (auto [a, h] : bridge_data) c.label.push_back(y.label[h]);
  }
  auto nm = [](const FiniteCategory& k, int f) { return k.names.empty() ? std::to_string(f) : k.names[f]; };
  for (int f = 0; f < mx; ++f) c.names.push_back(nm(x, f));
  for (int h = 0; h < my; ++h) c.names.push_back("*" + nm(y, h));
  for (auto [a, h] : bridge_data) c.names.push_back(std::to_string(a) + ">" + nm(y, h));
  return c;
}

// ---------------------------------------------------------------------------

NerveModel::NerveModel(FiniteCategory cat, int trunc, std::string name)
    : cat_(std::move(cat)), trunc_(trunc), name_(std::move(name)) {
  if (trunc < 0) throw ValidationError("truncation must be nonnegative");
  if (trunc > kMaxDim) throw TruncationError("truncation above 31 is not supported", trunc);
  check_truncation_cap(trunc);
  const int m = cat_.morphisms();
  long double cap = 1;
  for (int k = 0; k < trunc; ++k) cap *= std::max(m, 2);
  if (cap > 9.0e18L) throw UnsupportedInput("nerve too large to index at this truncation");
  chains_.assign(trunc + 1, {});
  index_.assign(trunc + 1, {});
  std::vector<int> nonid;
  for (int f = 0; f < m; ++f)
    if (!cat_.is_identity(f)) nonid.push_back(f);
  if (trunc >= 1) {
    for (int f : nonid) {
      index_[1][key(std::span<const int>(&f, 1))] = static_cast<std::int64_t>(chains_[1].size());
      chains_[1].push_back(f);
    }
  }
  for (int k = 2; k <= trunc; ++k) {
    const std::int64_t prev = static_cast<std::int64_t>(chains_[k - 1].size()) / (k - 1);
    std::vector<int> c(k);
    for (std::int64_t i = 0; i < prev; ++i) {
      auto p = chain(k - 1, i);
      std::copy(p.begin(), p.end(), c.begin());
      for (int g : nonid) {
        if (cat_.src[g] != cat_.tgt[c[k - 2]]) continue;
        c[k - 1] = g;
        index_[k][key(c)] = static_cast<std::int64_t>(chains_[k].size()) / k;
        chains_[k].insert(chains_[k].end(), c.begin(), c.end());
      }
    }
  }
}

std::uint64_t NerveModel::key(std::span<const int> chain) const {
  std::uint64_t k = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(std::max(cat_.morphisms(), 2));
  for (int f : chain) k = k * base + static_cast<std::uint64_t>(f);
  return k;
}

std::int64_t NerveModel::count(int k) const {
  if (k < 0 || k > trunc_) return 0;
  if (k == 0) return cat_.objects;
  return static_cast<std::int64_t>(chains_[k].size()) / k;
}

int NerveModel::vertex_object(int k, std::int64_t idx, int v) const {
  if (k == 0) return static_cast<int>(idx);
  auto c = chain(k, idx);
  return v == 0 ? cat_.src[c[0]] : cat_.tgt[c[v - 1]];
}

std::int64_t NerveModel::lookup(std::span<const int> chain) const {
  const int k = static_cast<int>(chain.size());
  if (k > trunc_) return -1;
  auto it = index_[k].find(key(chain));
  return it == index_[k].end() ? -1 : it->second;
}

Simplex NerveModel::restrict(int k, std::int64_t idx, std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size()) - 1;
  if (m == 0 || k == 0) {
    std::uint32_t bits = m > 0 ? low_bits(m) : 0u;
    return Simplex{m, vertex_object(k, idx, vertices[0]), bits};
  }
  auto c = chain(k, idx);
  std::array<int, kMaxDim + 1> red{};
  int len = 0;
  std::uint32_t bits = 0;
  for (int j = 1; j <= m; ++j) {
    int e = c[vertices[j - 1]];
    for (int t = vertices[j - 1] + 1; t < vertices[j]; ++t) e = cat_.then(e, c[t]);
    if (cat_.is_identity(e))
      bits |= 1u << (j - 1);
    else
      red[len++] = e;
  }
  if (len == 0) return Simplex{m, vertex_object(k, idx, vertices[0]), bits};
  std::int64_t r = lookup(std::span<const int>(red.data(), len));
  return Simplex{m, r, bits};
}

std::string NerveModel::describe(int k, std::int64_t idx) const {
  if (k == 0) return "[obj " + std::to_string(idx) + "]";
  std::string s = "[";
  auto c = chain(k, idx);
  for (int i = 0; i < k; ++i) {
    if (i) s += "|";
    s += cat_.names.empty() ? std::to_string(c[i]) : cat_.names[c[i]];
  }
  return s + "]";
}

int NerveModel::edge_label(std::int64_t idx) const {
  if (cat_.label.empty()) return -1;
  return cat_.label[chains_[1][idx]];
}

// ---------------------------------------------------------------------------

ProductModel::ProductModel(SimplicialComplexTrunc a, SimplicialComplexTrunc b, int trunc)
    : a_(std::move(a)), b_(std::move(b)), trunc_(trunc) {
  if (trunc > a_.trunc() || trunc > b_.trunc())
    throw TruncationError("product truncation exceeds a factor's truncation", trunc);
  check_truncation_cap(trunc);
  simplices_.assign(trunc + 1, {});
  index_.assign(trunc + 1, {});
  std::vector<std::uint32_t> ma, mb;
  for (int k = 0; k <= trunc; ++k) {
    for (int da = 0; da <= k; ++da) {
      masks_with_popcount(k, k - da, ma);
      for (std::uint32_t xa : ma) {
        for (int db = 0; db <= k; ++db) {
          masks_with_popcount(k, k - db, mb);
          for (std::uint32_t xb : mb) {
            if (xa & xb) continue;
            for (std::int64_t ia = 0; ia < a_.count(da); ++ia)
              for (std::int64_t ib = 0; ib < b_.count(db); ++ib) {
                index_[k][Key{ia, ib, xa, xb}] = static_cast<std::int64_t>(simplices_[k].size());
                simplices_[k].push_back({Simplex{k, ia, xa}, Simplex{k, ib, xb}});
              }
          }
        }
      }
    }
  }
}

std::int64_t ProductModel::lookup(int k, const Simplex& a, const Simplex& b) const {
  auto it = index_[k].find(Key{a.index, b.index, a.collapsed, b.collapsed});
  return it == index_[k].end() ? -1 : it->second;
}

Simplex ProductModel::restrict(int k, std::int64_t idx, std::span<const int> vertices) const {
  const auto& [sa, sb] = simplices_[k][idx];
  Simplex ra = restrict_simplex(a_.model(), sa, vertices);
  Simplex rb = restrict_simplex(b_.model(), sb, vertices);
  const int m = ra.dim;
  std::uint32_t common = ra.collapsed & rb.collapsed;
  const int md = m - __builtin_popcount(common);
  Simplex xa{md, ra.index, remove_bits(ra.collapsed, common, m)};
  Simplex xb{md, rb.index, remove_bits(rb.collapsed, common, m)};
  return Simplex{m, lookup(md, xa, xb), common};
}

int ProductModel::edge_label(std::int64_t idx) const {
  const Simplex& a = simplices_[1][idx].first;
  if (a.degenerate()) return kIdentityEdge;
  return a_.model().edge_label(a.index);
}

std::string ProductModel::describe(int k, std::int64_t idx) const {
  const auto& [sa, sb] = simplices_[k][idx];
  auto one = [](const SimplicialComplexTrunc& c, const Simplex& s) {
    std::string d = c.model().describe(s.base_dim(), s.index);
    if (s.collapsed) d += "s" + std::to_string(s.collapsed);
    return d;
  };
  return "(" + one(a_, sa) + ", " + one(b_, sb) + ")";
}

// ---------------------------------------------------------------------------

NerveFunctorMap::NerveFunctorMap(SimplicialComplexTrunc source, SimplicialComplexTrunc target,
                                 std::vector<int> on_objects, std::vector<int> on_morphisms)
    : src_(std::move(source)), tgt_(std::move(target)), obj_(std::move(on_objects)), mor_(std::move(on_morphisms)) {
  s_ = dynamic_cast<const NerveModel*>(&src_.model());
  t_ = dynamic_cast<const NerveModel*>(&tgt_.model());
  if (!s_ || !t_) throw std::invalid_argument("NerveFunctorMap needs nerve models");
}

Simplex NerveFunctorMap::image(int k, std::int64_t idx) const {
  if (k == 0) return Simplex{0, obj_[idx], 0};
  auto c = s_->chain(k, idx);
  std::array<int, kMaxDim + 1> red{};
  int len = 0;
  std::uint32_t bits = 0;
  const FiniteCategory& tc = t_->category();
  for (int j = 0; j < k; ++j) {
    int e = mor_[c[j]];
    if (tc.is_identity(e))
      bits |= 1u << j;
    else
      red[len++] = e;
  }
  if (len == 0) return Simplex{k, obj_[s_->vertex_object(k, idx, 0)], bits};
  return Simplex{k, t_->lookup(std::span<const int>(red.data(), len)), bits};
}

ProjectionMap::ProjectionMap(SimplicialComplexTrunc product, int which) : src_(std::move(product)), which_(which) {
  p_ = dynamic_cast<const ProductModel*>(&src_.model());
  if (!p_) throw std::invalid_argument("ProjectionMap needs a product model");
  tgt_ = which == 0 ? p_->first() : p_->second();
}

Simplex ProjectionMap::image(int k, std::int64_t idx) const {
  auto [a, b] = p_->components(k, idx);
  return which_ == 0 ? a : b;
}

// ---------------------------------------------------------------------------

SimplicialComplexTrunc nerve(const FiniteGroupoid& gpd, int n) {
  std::string name = gpd.connected() ? "B(G)" : "nerve(" + std::to_string(gpd.component_count()) + " comps)";
  return SimplicialComplexTrunc(std::make_shared<NerveModel>(FiniteCategory::from_groupoid(gpd), n, name));
}

SimplicialComplexTrunc nerve(const FiniteGroup& g, int n) {
  return SimplicialComplexTrunc(
      std::make_shared<NerveModel>(FiniteCategory::from_group(g), n, "B(G" + std::to_string(g.order()) + ")"));
}

namespace {

FiniteCategory action_category(const ActionGroupoid& ag, const FiniteGroup& g) {
  FiniteCategory c;
  c.objects = ag.groupoid.component_count();
  int total = 0;
  std::vector<int> base;
  for (const auto& s : ag.stabilizer_embedding) {
    base.push_back(total);
    total += static_cast<int>(s.size());
  }
  c.compose.assign(static_cast<std::size_t>(total) * total, -1);
  for (int o = 0; o < c.objects; ++o) {
    const auto& s = ag.stabilizer_embedding[o];
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < s.size(); ++i) {
      c.src.push_back(o);
      c.tgt.push_back(o);
      c.label.push_back(s[i]);
      c.names.push_back("x" + std::to_string(ag.representatives[o]) + ":" + g.label(s[i]));
      for (std::size_t j = 0; j < s.size(); ++j)
        c.compose[static_cast<std::size_t>(base[o] + i) * total + base[o] + j] = base[o] + pos[g.mul(s[i], s[j])];
    }
    c.identity.push_back(base[o]);
  }
  return c;
}

}  // namespace

BorelData borel_with_projection(const GSet& x, const FiniteGroup& g, int n) {
  BorelData d;
  d.groupoid = action_groupoid(x, g);
  FiniteCategory c = action_category(d.groupoid, g);
  std::vector<int> on_obj(c.objects, 0);
  std::vector<int> on_mor = c.label;
  d.total = SimplicialComplexTrunc(std::make_shared<NerveModel>(std::move(c), n, "X//G"));
  d.base = nerve(g, n);
  d.projection = std::make_shared<NerveFunctorMap>(d.total, d.base, on_obj, on_mor);
  return d;
}

SimplicialComplexTrunc borel(const GSet& x, const FiniteGroup& g, int n) {
  return borel_with_projection(x, g, n).total;
}

namespace {

CylinderData make_cylinder(const FiniteCategory& xc, const FiniteCategory& yc, const std::vector<int>& fo,
                           const std::vector<int>& fm, int n, const std::string& name) {
  CylinderData d;
  const int mx = xc.morphisms();
  auto cyl = std::make_shared<NerveModel>(FiniteCategory::cylinder(xc, yc, fo, fm), n, name);
  auto mask = std::make_shared<SubcomplexMask>(n + 1);
  for (int k = 0; k <= n; ++k) {
    (*mask)[k].assign(cyl->count(k), 0);
    for (std::int64_t i = 0; i < cyl->count(k); ++i) {
      if (k == 0) {
        (*mask)[k][i] = i < xc.objects;
        continue;
      }
      bool inside = true;
      for (int f : cyl->chain(k, i)) inside = inside && f < mx;
      (*mask)[k][i] = inside;
    }
  }
  d.in_source = mask;
  d.cylinder = SimplicialComplexTrunc(cyl);
  d.target = SimplicialComplexTrunc(std::make_shared<NerveModel>(yc, n, "target"));
  std::vector<int> obj(yc.objects), mor(yc.morphisms());
  for (int o = 0; o < yc.objects; ++o) obj[o] = xc.objects + o;
  for (int h = 0; h < yc.morphisms(); ++h) mor[h] = mx + h;
  d.target_inclusion = std::make_shared<NerveFunctorMap>(d.target, d.cylinder, obj, mor);
  return d;
}

}  // namespace

CylinderData borel_cylinder(const GSet& x, const FiniteGroup& g, int n) {
  ActionGroupoid ag = action_groupoid(x, g);
  FiniteCategory xc = action_category(ag, g);
  FiniteCategory yc = FiniteCategory::from_group(g);
  std::vector<int> fo(xc.objects, 0);
  return make_cylinder(xc, yc, fo, xc.label, n, "Cyl(X//G -> BG)");
}

CylinderData groupoid_cylinder(const FiniteGroupoid& gpd, int n) {
  FiniteCategory xc = FiniteCategory::from_groupoid(gpd);
  FiniteCategory yc = FiniteCategory::from_group(FiniteGroup::trivial());
  std::vector<int> fo(xc.objects, 0), fm(xc.morphisms(), 0);
  return make_cylinder(xc, yc, fo, fm, n, "Cyl(X -> pt)");
}

}  // namespace ordcalc
