#include "ordcalc/steenrod.hpp"

#include <map>
#include <mutex>

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

using K = CoeffModule::Kind;

struct Split {
  std::vector<int> front, back;
};

// All (front, back) vertex lists of the cup-i formula on an n-simplex for
// factors of degree p and q.
const std::vector<Split>& splits(int n, int i, int p) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Split>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, i, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Split> out;
  const int u = n - i;
  for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
    if (__builtin_popcount(mask) != u) continue;
    std::uint32_t u0 = 0, u1 = 0;
    int j = 0;
    for (int v = 0; v <= n; ++v)
      if (mask >> v & 1u) {
        ++j;
        ((v - j) % 2 == 0 ? u0 : u1) |= 1u << v;
      }
    Split s;
    for (int v = 0; v <= n; ++v) {
      if (!(u0 >> v & 1u)) s.front.push_back(v);
      if (!(u1 >> v & 1u)) s.back.push_back(v);
    }
    if (static_cast<int>(s.front.size()) == p + 1) out.push_back(std::move(s));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

CoeffModule product_module(const Cochain& a, const Cochain& b) {
  const CoeffModule &x = a.coeff, &y = b.coeff;
  CoeffModule out;
  if (x.kind == y.kind && x.modulus == y.modulus) {
    out = x;
  } else if (x.kind == K::Int) {
    out = y;
  } else if (y.kind == K::Int) {
    out = x;
  } else if (x.is_z2() && y.kind == K::QmodZ && y.modulus % 2 == 0) {
    for (auto v : b.values)
      if (v % (y.modulus / 2) != 0) throw std::invalid_argument("cup: Z2 x Q/Z needs 2-torsion values");
    out = y;
  } else if (y.is_z2() && x.kind == K::QmodZ && x.modulus % 2 == 0) {
    for (auto v : a.values)
      if (v % (x.modulus / 2) != 0) throw std::invalid_argument("cup: Q/Z x Z2 needs 2-torsion values");
    out = x;
  } else {
    throw std::invalid_argument("cup: unsupported coefficient pairing " + x.name() + " x " + y.name());
  }
  out.twist.reset();
  if (x.twist_nontrivial() && y.twist_nontrivial())
    throw std::invalid_argument("cup: both factors twisted");
  if (x.twist) out.twist = x.twist;
  if (y.twist) out.twist = y.twist;
  return out;
}

// product of values in the target module (numerators for Q/Z)
std::int64_t multiply(const CoeffModule& out, const Cochain& a, std::int64_t va, const Cochain& b, std::int64_t vb) {
  RingOps r = out.ring();
  if (out.kind != K::QmodZ) return r.mul(va, vb);
  // one factor is an integer (or Z/2 against 2-torsion), the other a numerator
  bool a_num = a.coeff.kind == K::QmodZ;
  bool b_num = b.coeff.kind == K::QmodZ;
  if (a_num && b_num) throw std::invalid_argument("cup: Q/Z x Q/Z");
  return a_num ? r.mul(va, vb) : r.mul(vb, va);
}

int orientation_of(const SimplicialComplexTrunc& cx, const TimeReversalTag& tw, int k, std::int64_t s, int p) {
  if (p == 0) return 0;
  const int v[2] = {0, p};
  Simplex e = cx.model().restrict(k, s, std::span<const int>(v, 2));
  if (e.degenerate()) return 0;
  int g = cx.model().edge_label(e.index);
  if (g == SimplicialModel::kIdentityEdge) return 0;
  if (g < 0) throw ValidationError("twisted cup needs group-labelled edges");
  return tw.orientation[g];
}

}  // namespace

Cochain cup(const Cochain& a, const Cochain& b) {
  if (!a.complex.same(b.complex)) throw std::invalid_argument("cup: cochains on different complexes");
  const CoeffModule out = product_module(a, b);
  const int p = a.degree, q = b.degree, n = p + q;
  if (n > a.complex.trunc()) throw TruncationError("cup: degree exceeds truncation", n);
  Cochain c = Cochain::zero(a.complex, n, out);
  const SimplicialModel& m = a.complex.model();
  std::vector<int> front(p + 1), back(q + 1);
  for (int i = 0; i <= p; ++i) front[i] = i;
  for (int i = 0; i <= q; ++i) back[i] = p + i;
  const bool twist = b.coeff.twist_nontrivial() && out.kind != K::IntMod;
  RingOps r = out.ring();
  for (std::int64_t s = 0; s < a.complex.count(n); ++s) {
    std::int64_t va = a.value(m.restrict(n, s, front));
    if (va == 0) continue;
    std::int64_t vb = b.value(m.restrict(n, s, back));
    if (vb == 0) continue;
    std::int64_t v = multiply(out, a, va, b, vb);
    if (twist && orientation_of(a.complex, *b.coeff.twist, n, s, p)) v = r.neg(v);
    c.values[s] = r.norm(v);
  }
  return c;
}

Cochain cup_i(int i, const Cochain& a, const Cochain& b) {
  if (!a.coeff.is_z2() || !b.coeff.is_z2()) throw std::invalid_argument("cup_i: Z/2 coefficients only");
  if (!a.complex.same(b.complex)) throw std::invalid_argument("cup_i: cochains on different complexes");
  if (i < 0) throw std::invalid_argument("cup_i: i >= 0");
  const int p = a.degree, q = b.degree, n = p + q - i;
  if (n > a.complex.trunc()) throw TruncationError("cup_i: degree exceeds truncation", n);
  CoeffModule out = CoeffModule::mod(2);
  if (n < std::max(p, q)) return Cochain::zero(a.complex, std::max(n, 0), out);
  Cochain c = Cochain::zero(a.complex, n, out);
  const SimplicialModel& m = a.complex.model();
  const auto& sp = splits(n, i, p);
  for (std::int64_t s = 0; s < a.complex.count(n); ++s) {
    int acc = 0;
    for (const auto& t : sp) {
      if (static_cast<int>(t.back.size()) != q + 1) continue;
      if (!a.value(m.restrict(n, s, t.front))) continue;
      if (b.value(m.restrict(n, s, t.back))) acc ^= 1;
    }
    c.values[s] = acc;
  }
  return c;
}

Cochain sq(int k, const Cochain& a) {
  if (!a.coeff.is_z2()) throw std::invalid_argument("sq: Z/2 coefficients only");
  const int p = a.degree;
  if (k < 0) throw std::invalid_argument("sq: negative degree");
  if (k == 0) return a;
  if (k > p) {
    if (p + k > a.complex.trunc()) throw TruncationError("sq: degree exceeds truncation", p + k);
    return Cochain::zero(a.complex, p + k, a.coeff);
  }
  return cup_i(p - k, a, a);
}

Cochain bockstein_sign(const Cochain& a, std::int64_t bound) {
  if (!a.coeff.is_z2()) throw std::invalid_argument("bockstein_sign: Z/2 input");
  if (bound <= 0 || bound % 2) throw std::invalid_argument("bockstein_sign: bound must be even");
  CoeffModule out = CoeffModule::qmodz(bound);
  out.twist = a.coeff.twist;
  Cochain c = Cochain::zero(a.complex, a.degree, out);
  for (std::size_t s = 0; s < a.values.size(); ++s) c.values[s] = a.values[s] ? bound / 2 : 0;
  return c;
}

}  // namespace ordcalc
