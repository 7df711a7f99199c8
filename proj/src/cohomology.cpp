#include "ordcalc/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "ordcalc/error.hpp"

namespace ordcalc {

struct CohomologyDetail {
  RingOps ring;
  CoeffModule::Kind kind;
  std::shared_ptr<const SmithForm> a;  // delta_k
  std::vector<std::int64_t> np;        // non-pivot columns of delta_k
  SmithForm w;                         // Smith form of the reduced incoming matrix
  struct TSlot {
    std::int64_t col, gv, order;
  };
  struct QSlot {
    std::int64_t row, order;
  };
  std::vector<TSlot> t;
  std::vector<QSlot> q;
  std::vector<std::int64_t> divisible_rows;
  std::int64_t dim = 0;
};

namespace {

// GF(2) echelon of B^k for lexicographically minimal representatives.
struct Gf2Echelon {
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::int64_t> lead;  // lowest set bit of each row

  explicit Gf2Echelon(std::int64_t n) : words(static_cast<std::size_t>((n + 63) / 64)) {}

  static std::int64_t lowest(const std::vector<std::uint64_t>& v) {
    for (std::size_t w = 0; w < v.size(); ++w)
      if (v[w]) return static_cast<std::int64_t>(w * 64 + __builtin_ctzll(v[w]));
    return -1;
  }
  void reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v[lead[r] / 64] >> (lead[r] % 64) & 1u)
        for (std::size_t w = 0; w < words; ++w) v[w] ^= rows[r][w];
  }
  void insert(std::vector<std::uint64_t> v) {
    reduce(v);
    std::int64_t l = lowest(v);
    if (l < 0) return;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r][l / 64] >> (l % 64) & 1u)
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= v[w];
    rows.push_back(std::move(v));
    lead.push_back(l);
  }
};

}  // namespace

CohomologyResult complex_cohomology(std::shared_ptr<const CochainComplex> cx, const CoeffModule& coeff, int k) {
  coeff.validate();
  if (k + 1 > cx->top())
    throw TruncationError("cohomology in degree " + std::to_string(k) + " needs truncation >= " +
                              std::to_string(k + 1) + "; raise trunc to " + std::to_string(k + 1),
                          k + 1);
  using K = CoeffModule::Kind;
  auto det = std::make_shared<CohomologyDetail>();
  det->ring = coeff.ring();
  det->kind = coeff.kind;
  det->dim = cx->dim(k);
  const RingOps z{0};
  const RingOps& r = det->ring;
  det->a = cx->smith(k);
  const SmithForm& A = *det->a;
  std::vector<std::int64_t> pos(det->dim, -1);
  for (std::int64_t c = 0; c < det->dim; ++c)
    if (A.col_pivot_slot[c] < 0) {
      pos[c] = static_cast<std::int64_t>(det->np.size());
      det->np.push_back(c);
    }
  // reduced incoming matrix W' = rows NP of C^-1 delta_{k-1}
  auto incoming = cx->coboundary(k - 1);
  SparseIntMatrix bt = incoming->transpose();  // columns of delta_{k-1} as rows
  std::vector<std::vector<SparseEntry>> wrows(det->np.size());
  for (std::int64_t c = 0; c < bt.rows(); ++c) {
    std::vector<std::int64_t> v(det->dim, 0);
    for (const auto& e : bt.row(c)) v[e.col] = e.val;
    A.apply_col_transform_inverse(v, z);
    for (std::int64_t i = 0; i < det->dim; ++i) {
      if (v[i] == 0) continue;
      if (pos[i] < 0) throw std::logic_error("cohomology: image of delta_{k-1} not in kernel of delta_k");
      wrows[pos[i]].push_back({static_cast<std::int32_t>(c), v[i]});
    }
  }
  SparseIntMatrix wm(static_cast<std::int64_t>(det->np.size()), bt.rows());
  for (auto& row : wrows) wm.append_row(std::move(row));
  det->w = smith_normal_form(wm);
  const SmithForm& W = det->w;

  CohomologyResult res;
  res.degree = k;
  res.coeff = coeff;
  res.complex = cx;
  std::vector<std::int64_t> orders;
  auto emit_t = [&](std::int64_t col, std::int64_t gv, std::int64_t order) {
    det->t.push_back({col, gv, order});
    std::vector<std::int64_t> y(det->dim, 0);
    y[col] = gv;
    A.apply_col_transform(y, r);
    res.basis_generators.push_back(std::move(y));
    res.orders.push_back(order);
  };
  for (std::size_t s = 0; s < A.invariant.size(); ++s) {
    const std::int64_t d = A.invariant[s];
    const std::int64_t col = A.pivot_col[s];
    if (coeff.kind == K::IntMod) {
      std::int64_t g = std::gcd(coeff.modulus, d);
      if (g > 1) emit_t(col, coeff.modulus / g, g);
    } else if (coeff.kind == K::QmodZ && d > 1) {
      if (coeff.modulus % d != 0)
        throw ModulusEscalation("Q/Z bound " + std::to_string(coeff.modulus) + " misses invariant factor " +
                                    std::to_string(d),
                                2 * lcm64(coeff.modulus, d));
      emit_t(col, coeff.modulus / d, d);
    }
  }
  auto lift = [&](std::int64_t row) {
    std::vector<std::int64_t> u(det->np.size(), 0);
    u[row] = 1;
    W.apply_row_ops_inverse(u, r);
    std::vector<std::int64_t> y(det->dim, 0);
    for (std::size_t i = 0; i < u.size(); ++i) y[det->np[i]] = u[i];
    A.apply_col_transform(y, r);
    return y;
  };
  for (std::size_t s = 0; s < W.invariant.size(); ++s) {
    const std::int64_t d = W.invariant[s];
    std::int64_t order = 1;
    if (coeff.kind == K::Int) order = d;
    if (coeff.kind == K::IntMod) order = std::gcd(coeff.modulus, d);
    if (order > 1) {
      det->q.push_back({W.pivot_row[s], order});
      res.basis_generators.push_back(lift(W.pivot_row[s]));
      res.orders.push_back(order);
    }
  }
  for (std::int64_t row = 0; row < static_cast<std::int64_t>(det->np.size()); ++row) {
    if (W.row_pivot_slot[row] >= 0) continue;
    if (coeff.kind == K::QmodZ) {
      det->divisible_rows.push_back(row);
      ++res.divisible_rank;
      continue;
    }
    std::int64_t order = coeff.kind == K::Int ? 0 : coeff.modulus;
    det->q.push_back({row, order});
    res.basis_generators.push_back(lift(row));
    res.orders.push_back(order);
  }
  // Z/2: replace each representative by the lexicographically smallest element of its coset mod B^k
  if (coeff.is_z2() && !res.basis_generators.empty()) {
    Gf2Echelon ech(det->dim);
    for (std::int64_t c = 0; c < bt.rows(); ++c) {
      std::vector<std::uint64_t> v(ech.words, 0);
      for (const auto& e : bt.row(c))
        if (mod_floor(e.val, 2)) v[e.col / 64] ^= 1ull << (e.col % 64);
      ech.insert(std::move(v));
    }
    for (auto& g : res.basis_generators) {
      std::vector<std::uint64_t> v(ech.words, 0);
      for (std::int64_t i = 0; i < det->dim; ++i)
        if (g[i] & 1) v[i / 64] |= 1ull << (i % 64);
      ech.reduce(v);
      for (std::int64_t i = 0; i < det->dim; ++i) g[i] = (v[i / 64] >> (i % 64)) & 1u;
    }
  }
  std::vector<std::int64_t> all = res.orders;
  res.group = AbGroupExpr::from_cyclic_orders(all);
  for (int i = 0; i < res.divisible_rank; ++i) res.group = res.group + AbGroupExpr::cstar();
  if (auto s = dynamic_cast<const SimplicialCochainComplex*>(cx.get())) {
    for (const auto& g : res.basis_generators) res.generators.push_back(s->from_basis(k, coeff, g));
  } else if (auto c = dynamic_cast<const ConeComplex*>(cx.get())) {
    for (const auto& g : res.basis_generators) res.pair_generators.push_back(c->split(k, coeff, g));
  }
  res.detail_ = det;
  return res;
}

std::vector<std::int64_t> CohomologyResult::coordinates(const std::vector<std::int64_t>& x) const {
  const CohomologyDetail& d = *detail_;
  const RingOps& r = d.ring;
  std::vector<std::int64_t> y(x.begin(), x.end());
  for (auto& v : y) v = r.norm(v);
  d.a->apply_col_transform_inverse(y, r);
  std::vector<std::int64_t> out;
  for (const auto& t : d.t) {
    std::int64_t v = r.norm(y[t.col]);
    if (v % t.gv != 0) throw std::invalid_argument("coordinates: input is not a cocycle");
    out.push_back(mod_floor(v / t.gv, t.order));
  }
  // remaining pivot columns must vanish for a cocycle
  for (std::size_t s = 0; s < d.a->invariant.size(); ++s) {
    std::int64_t col = d.a->pivot_col[s], inv = d.a->invariant[s];
    if (r.mul(inv, y[col]) != 0) throw std::invalid_argument("coordinates: input is not a cocycle");
  }
  std::vector<std::int64_t> u(d.np.size());
  for (std::size_t i = 0; i < d.np.size(); ++i) u[i] = y[d.np[i]];
  d.w.apply_row_ops(u, r);
  for (const auto& q : d.q) out.push_back(q.order == 0 ? u[q.row] : mod_floor(u[q.row], q.order));
  for (auto row : d.divisible_rows) out.push_back(r.norm(u[row]));
  return out;
}

std::vector<std::int64_t> CohomologyResult::coordinates(const Cochain& c) const {
  if (auto s = dynamic_cast<const SimplicialCochainComplex*>(complex.get())) return coordinates(s->to_basis(c));
  throw std::invalid_argument("coordinates(Cochain) needs a simplicial complex");
}

bool CohomologyResult::is_trivial_class(const std::vector<std::int64_t>& x) const {
  for (auto v : coordinates(x))
    if (v != 0) return false;
  return true;
}

std::shared_ptr<const SmithForm> CohomologyResult::forward_smith() const { return detail_->a; }

CohomologyResult cohomology(const SimplicialComplexTrunc& cx, const CoeffModule& coeff, int k) {
  return complex_cohomology(cochain_complex(cx, coeff.twist), coeff, k);
}

CohomologyResult relative_cohomology(const SimplicialComplexTrunc& cx, std::shared_ptr<const SubcomplexMask> sub,
                                     const CoeffModule& coeff, int k) {
  return complex_cohomology(cochain_complex(cx, coeff.twist, std::move(sub)), coeff, k);
}

bool in_coboundaries(const CochainComplex& cx, int k, const CoeffModule& coeff, std::vector<std::int64_t> x) {
  using K = CoeffModule::Kind;
  const RingOps r = coeff.ring();
  for (auto& v : x) v = r.norm(v);
  auto s = cx.smith(k - 1);
  s->apply_row_ops(x, r);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t v = r.norm(x[i]);
    std::int64_t slot = s->row_pivot_slot[i];
    if (slot < 0) {
      if (v != 0) return false;
      continue;
    }
    std::int64_t d = s->invariant[slot];
    if (coeff.kind == K::Int && v % d != 0) return false;
    if (coeff.kind == K::IntMod && v % std::gcd(d, coeff.modulus) != 0) return false;
  }
  return true;
}

bool is_coboundary(const Cochain& c) {
  auto cx = cochain_complex(c.complex, c.coeff.twist);
  return in_coboundaries(*cx, c.degree, c.coeff, cx->to_basis(c));
}

bool is_coboundary(const Cochain& c, std::shared_ptr<const SubcomplexMask> sub) {
  auto cx = cochain_complex(c.complex, c.coeff.twist, std::move(sub));
  return in_coboundaries(*cx, c.degree, c.coeff, cx->to_basis(c));
}

std::int64_t auto_modulus(const CochainComplex& cx, int lo, int hi) {
  std::int64_t l = 1;
  for (int j = std::max(lo - 1, 0); j <= hi; ++j) {
    if (j + 1 > cx.top()) break;
    for (auto d : cx.smith(j)->invariant) l = lcm64(l, d);
  }
  return 2 * l;
}

CoeffModule auto_qmodz(const SimplicialComplexTrunc& cx, int k, const std::optional<TimeReversalTag>& twist) {
  auto c = cochain_complex(cx, twist);
  CoeffModule m = CoeffModule::qmodz(auto_modulus(*c, k, k));
  if (twist) m.twist = twist;
  return m;
}

AbGroupExpr integral_homology(const CochainComplex& cx, int p) {
  // H_p: torsion = invariants > 1 of delta_p, free rank = dim_p - rank delta_p - rank delta_{p-1}
  if (p + 1 > cx.top()) throw TruncationError("integral homology needs truncation >= p+1", p + 1);
  auto sp = cx.smith(p);
  auto sm = cx.smith(p - 1);
  std::vector<std::int64_t> orders;
  for (auto d : sp->invariant)
    if (d > 1) orders.push_back(d);
  std::int64_t free = cx.dim(p) - sp->rank() - sm->rank();
  for (std::int64_t i = 0; i < free; ++i) orders.push_back(0);
  return AbGroupExpr::from_cyclic_orders(orders);
}

}  // namespace ordcalc
