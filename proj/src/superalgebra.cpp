#include "ordcalc/superalgebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ordcalc/error.hpp"

namespace ordcalc {

SuperAlgebra::SuperAlgebra(FieldKind field, std::vector<int> parity, QIVector unit)
    : field_(field), parity_(std::move(parity)), unit_(std::move(unit)) {
  if (static_cast<int>(unit_.size()) != dim()) throw ValidationError("unit vector has the wrong length");
  for (int p : parity_)
    if (p != 0 && p != 1) throw ValidationError("parity entries must be 0 or 1");
  c_.assign(static_cast<std::size_t>(dim()) * dim(), {});
}

int SuperAlgebra::unit_index() const {
  int idx = -1;
  for (int i = 0; i < dim(); ++i) {
    if (unit_[i].is_zero()) continue;
    if (idx >= 0 || unit_[i] != QI(1)) return -1;
    idx = i;
  }
  return idx;
}

bool SuperAlgebra::graded() const {
  return std::any_of(parity_.begin(), parity_.end(), [](int p) { return p != 0; });
}

void SuperAlgebra::set_product(int i, int j, std::vector<Term> terms) {
  std::map<int, QI> acc;
  for (auto& [k, v] : terms) acc[k] += v;
  auto& slot = c_[static_cast<std::size_t>(i) * dim() + j];
  slot.clear();
  for (auto& [k, v] : acc)
    if (!v.is_zero()) slot.emplace_back(k, v);
}

void SuperAlgebra::add_term(int i, int j, int k, const QI& v) {
  if (i < 0 || j < 0 || k < 0 || i >= dim() || j >= dim() || k >= dim())
    throw ValidationError("structure constant index out of range");
  auto& slot = c_[static_cast<std::size_t>(i) * dim() + j];
  for (auto it = slot.begin(); it != slot.end(); ++it)
    if (it->first == k) {
      it->second += v;
      if (it->second.is_zero()) slot.erase(it);
      return;
    }
  if (!v.is_zero()) {
    slot.emplace_back(k, v);
    std::sort(slot.begin(), slot.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  }
}

QIVector SuperAlgebra::mul(const QIVector& a, const QIVector& b) const {
  QIVector out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      QI ab = a[i] * b[j];
      for (const auto& [k, v] : product(i, j)) out[k] += ab * v;
    }
  }
  return out;
}

QIVector SuperAlgebra::basis(int i) const {
  QIVector v(dim());
  v[i] = 1;
  return v;
}

QIMatrix SuperAlgebra::left(const QIVector& a) const {
  QIMatrix m(dim(), QIVector(dim()));
  for (int j = 0; j < dim(); ++j) {
    QIVector col = mul(a, basis(j));
    for (int k = 0; k < dim(); ++k) m[k][j] = col[k];
  }
  return m;
}

void SuperAlgebra::validate() const {
  const int n = dim();
  if (field_ == FieldKind::Q) {
    for (const auto& s : c_)
      for (const auto& t : s)
        if (!t.second.is_real()) throw ValidationError("non-rational structure constant over Q");
    for (const auto& u : unit_)
      if (!u.is_real()) throw ValidationError("non-rational unit over Q");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : product(i, j))
        if (parity_[k] != (parity_[i] ^ parity_[j]))
          throw ValidationError("product b" + std::to_string(i) + " b" + std::to_string(j) +
                                " does not respect parity (term b" + std::to_string(k) + ")");
  for (int i = 0; i < n; ++i) {
    QIVector b = basis(i);
    if (mul(unit_, b) != b || mul(b, unit_) != b)
      throw ValidationError("unit law fails on b" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QIVector ij(n);
      for (const auto& [k, v] : product(i, j)) ij[k] = v;
      for (int l = 0; l < n; ++l) {
        QIVector left_side = mul(ij, basis(l));
        QIVector jl(n);
        for (const auto& [k, v] : product(j, l)) jl[k] = v;
        if (left_side != mul(basis(i), jl))
          throw ValidationError("associativity fails on (b" + std::to_string(i) + ", b" + std::to_string(j) +
                                ", b" + std::to_string(l) + ")");
      }
    }
}

SuperAlgebra base_field(FieldKind f) {
  SuperAlgebra a(f, {0}, {QI(1)});
  a.add_term(0, 0, 0, 1);
  a.name = field_name(f);
  return a;
}

SuperAlgebra matrix_algebra(int k, FieldKind f) {
  if (k < 1) throw ValidationError("matrix size must be positive");
  QIVector unit(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) unit[a * k + a] = 1;
  SuperAlgebra m(f, std::vector<int>(static_cast<std::size_t>(k) * k, 0), unit);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int d = 0; d < k; ++d) m.add_term(a * k + b, b * k + d, a * k + d, 1);
  m.name = "Mat_" + std::to_string(k) + "(" + field_name(f) + ")";
  return m;
}

SuperAlgebra quaternions() {
  SuperAlgebra h(FieldKind::Q, {0, 0, 0, 0}, {1, 0, 0, 0});
  // 1, i, j, k
  const int table[4][4][2] = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                              {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
                              {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
                              {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) h.add_term(a, b, table[a][b][0], table[a][b][1]);
  h.name = "H";
  return h;
}

SuperAlgebra clifford(int n, FieldKind f) {
  if (n < 0 || n > 10) throw ValidationError("clifford: 0 <= n <= 10");
  const int d = 1 << n;
  std::vector<int> parity(d);
  for (int s = 0; s < d; ++s) parity[s] = __builtin_popcount(s) & 1;
  QIVector unit(d);
  unit[0] = 1;
  SuperAlgebra c(f, parity, unit);
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) {
      int swaps = 0;
      for (int b = 0; b < n; ++b)
        if (t >> b & 1) swaps += __builtin_popcount(s >> (b + 1));
      int sign = (swaps + __builtin_popcount(s & t)) % 2 ? -1 : 1;
      c.add_term(s, t, s ^ t, sign);
    }
  c.name = "Cliff(" + std::to_string(n) + ")";
  return c;
}

SuperAlgebra tensor(const SuperAlgebra& a, const SuperAlgebra& b) {
  const int da = a.dim(), db = b.dim();
  FieldKind f = a.field() == FieldKind::QI || b.field() == FieldKind::QI ? FieldKind::QI : FieldKind::Q;
  std::vector<int> parity(static_cast<std::size_t>(da) * db);
  QIVector unit(parity.size());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      parity[i * db + j] = a.parity(i) ^ b.parity(j);
      unit[i * db + j] = a.unit()[i] * b.unit()[j];
    }
  SuperAlgebra t(f, parity, unit);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          const auto& pa = a.product(i, k);
          const auto& pb = b.product(j, l);
          if (pa.empty() || pb.empty()) continue;
          int sign = (b.parity(j) & a.parity(k)) ? -1 : 1;
          std::vector<SuperAlgebra::Term> terms;
          for (const auto& [x, u] : pa)
            for (const auto& [y, v] : pb) terms.emplace_back(x * db + y, u * v * QI(sign));
          t.set_product(i * db + j, k * db + l, std::move(terms));
        }
  t.name = a.name + " (x) " + b.name;
  return t;
}

SuperAlgebra mat(const SuperAlgebra& a, int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw ValidationError("mat: need p + q >= 1");
  const int k = p + q;
  SuperAlgebra m = matrix_algebra(k, a.field());
  std::vector<int> parity(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) parity[r * k + s] = (r >= p) ^ (s >= p);
  SuperAlgebra graded(a.field(), parity, m.unit());
  for (int i = 0; i < k * k; ++i)
    for (int j = 0; j < k * k; ++j) graded.set_product(i, j, m.product(i, j));
  graded.name = "Mat_{" + std::to_string(p) + "|" + std::to_string(q) + "}";
  SuperAlgebra t = tensor(a, graded);
  t.name = graded.name + "(" + a.name + ")";
  return t;
}

SuperAlgebra opposite(const SuperAlgebra& a) {
  SuperAlgebra o(a.field(), a.parities(), a.unit());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      int sign = (a.parity(i) & a.parity(j)) ? -1 : 1;
      std::vector<SuperAlgebra::Term> terms;
      for (const auto& [k, v] : a.product(j, i)) terms.emplace_back(k, v * QI(sign));
      o.set_product(i, j, std::move(terms));
    }
  o.name = a.name + "^op";
  return o;
}

SuperAlgebra group_algebra(const FiniteGroup& g, FieldKind f) {
  QIVector unit(g.order());
  unit[g.identity()] = 1;
  SuperAlgebra a(f, std::vector<int>(g.order(), 0), unit);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) a.add_term(x, y, g.mul(x, y), 1);
  a.name = field_name(f) + "[G" + std::to_string(g.order()) + "]";
  return a;
}

SuperAlgebra polynomial_quotient(const QIVector& poly, FieldKind f) {
  const int d = static_cast<int>(poly.size()) - 1;
  if (d < 1 || poly.back() != QI(1)) throw ValidationError("polynomial_quotient: need a monic polynomial of degree >= 1");
  // x^m reduced, m = 0 .. 2d-2
  std::vector<QIVector> pw;
  for (int m = 0; m <= 2 * d - 2; ++m) {
    QIVector v(d);
    if (m < d) {
      v[m] = 1;
    } else {
      const QIVector& prev = pw[m - 1];
      // x * prev, then reduce x^d = -sum poly[i] x^i
      QIVector s(d);
      for (int i = 0; i + 1 < d; ++i) s[i + 1] = prev[i];
      const QI top = prev[d - 1];
      for (int i = 0; i < d; ++i) s[i] -= top * poly[i];
      v = s;
    }
    pw.push_back(v);
  }
  QIVector unit(d);
  unit[0] = 1;
  SuperAlgebra a(f, std::vector<int>(d, 0), unit);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!pw[i + j][k].is_zero()) a.add_term(i, j, k, pw[i + j][k]);
  a.name = field_name(f) + "[x]/(" + render_poly(poly) + ")";
  return a;
}

SuperAlgebra complexify(const SuperAlgebra& a) {
  SuperAlgebra c(FieldKind::QI, a.parities(), a.unit());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c.set_product(i, j, a.product(i, j));
  c.name = a.name + " (x) C";
  return c;
}

SuperAlgebra ungraded(const SuperAlgebra& a) {
  SuperAlgebra u(a.field(), std::vector<int>(a.dim(), 0), a.unit());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) u.set_product(i, j, a.product(i, j));
  u.name = a.name;
  return u;
}

Subspace centre(const SuperAlgebra& a, bool graded) {
  const int n = a.dim();
  Subspace out;
  for (int s = 0; s < 2; ++s) {
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if (a.parity(i) == s) vars.push_back(i);
    if (vars.empty()) continue;
    QIMatrix eqs;
    for (int j = 0; j < n; ++j) {
      const int sign = graded && (s & a.parity(j)) ? -1 : 1;
      QIMatrix block(n, QIVector(vars.size()));
      bool any = false;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        for (const auto& [k, c] : a.product(vars[v], j)) {
          block[k][v] += c;
          any = true;
        }
        for (const auto& [k, c] : a.product(j, vars[v])) {
          block[k][v] -= c * QI(sign);
          any = true;
        }
      }
      if (!any) continue;
      for (auto& row : block)
        if (std::any_of(row.begin(), row.end(), [](const QI& x) { return !x.is_zero(); })) eqs.push_back(row);
      // keep the system small
      if (eqs.size() > 4 * vars.size()) {
        rref(eqs);
        while (!eqs.empty() &&
               std::all_of(eqs.back().begin(), eqs.back().end(), [](const QI& x) { return x.is_zero(); }))
          eqs.pop_back();
      }
    }
    std::vector<QIVector> null;
    if (eqs.empty()) {
      for (std::size_t v = 0; v < vars.size(); ++v) {
        QIVector e(vars.size());
        e[v] = 1;
        null.push_back(e);
      }
    } else {
      null = nullspace(eqs, static_cast<int>(vars.size()));
    }
    for (const auto& z : null) {
      QIVector full(n);
      for (std::size_t v = 0; v < vars.size(); ++v) full[vars[v]] = z[v];
      out.basis.push_back(std::move(full));
    }
  }
  return out;
}

namespace {

// Coordinates of vectors in a subspace basis via a set of pivot rows.
struct Coordinates {
  std::vector<int> rows;
  QIMatrix inverse;

  Coordinates(const std::vector<QIVector>& basis, int n) {
    const int d = static_cast<int>(basis.size());
    QIMatrix t(basis);  // d x n
    QIMatrix work = t;
    rows = rref(work);
    if (static_cast<int>(rows.size()) != d) throw ValidationError("subspace basis is not independent");
    QIMatrix square(d, QIVector(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) square[r][c] = basis[c][rows[r]];
    inverse = *ordcalc::inverse(square);
    (void)n;
  }
  QIVector of(const QIVector& v, const std::vector<QIVector>& basis) const {
    const int d = static_cast<int>(rows.size());
    QIVector c(d);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) c[r] += inverse[r][s] * v[rows[s]];
    // membership check
    QIVector back(v.size());
    for (int r = 0; r < d; ++r)
      for (std::size_t k = 0; k < v.size(); ++k) back[k] += c[r] * basis[r][k];
    if (back != v) throw ValidationError("vector is not in the subspace");
    return c;
  }
};

int vector_parity(const SuperAlgebra& a, const QIVector& v) {
  int p = -1;
  for (int i = 0; i < a.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (p >= 0 && p != a.parity(i)) throw ValidationError("subalgebra basis vector is not homogeneous");
    p = a.parity(i);
  }
  return p < 0 ? 0 : p;
}

}  // namespace

SuperAlgebra subalgebra(const SuperAlgebra& a, const Subspace& s) {
  Coordinates co(s.basis, a.dim());
  std::vector<int> parity;
  for (const auto& b : s.basis) parity.push_back(vector_parity(a, b));
  SuperAlgebra out(a.field(), parity, co.of(a.unit(), s.basis));
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      QIVector c = co.of(a.mul(s.basis[i], s.basis[j]), s.basis);
      std::vector<SuperAlgebra::Term> terms;
      for (int k = 0; k < s.dim(); ++k)
        if (!c[k].is_zero()) terms.emplace_back(k, c[k]);
      out.set_product(i, j, std::move(terms));
    }
  out.name = "subalgebra of " + a.name;
  return out;
}

namespace {

QIMatrix trace_form(const SuperAlgebra& a) {
  const int n = a.dim();
  QIVector tr(n);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      for (const auto& [l, v] : a.product(k, m))
        if (l == m) tr[k] += v;
  QIMatrix t(n, QIVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : a.product(i, j)) t[i][j] += v * tr[k];
  return t;
}

}  // namespace

SeparabilityReport is_separable(const SuperAlgebra& a) {
  SeparabilityReport r;
  r.radical.basis = nullspace(trace_form(a), a.dim());
  r.separable = r.radical.basis.empty();
  return r;
}

std::string BrauerClass::name() const {
  switch (kind) {
    case BrauerKind::R: return "R";
    case BrauerKind::H: return "H";
    case BrauerKind::Even: return "even";
    case BrauerKind::Odd: return "odd";
    case BrauerKind::Trivial: return "trivial";
  }
  return "?";
}

BrauerClass operator*(const BrauerClass& a, const BrauerClass& b) {
  if (a.base != b.base) throw ValidationError("Brauer classes over different bases");
  BrauerClass c = a;
  auto bit = [](BrauerKind k) { return k == BrauerKind::H || k == BrauerKind::Odd; };
  bool x = bit(a.kind) ^ bit(b.kind);
  if (a.kind == BrauerKind::R || a.kind == BrauerKind::H) c.kind = x ? BrauerKind::H : BrauerKind::R;
  else if (a.kind == BrauerKind::Trivial) c.kind = b.kind;
  else c.kind = x ? BrauerKind::Odd : BrauerKind::Even;
  return c;
}

BrauerClass inverse(const BrauerClass& a) { return a; }  // both groups have exponent 2

const std::vector<CalibrationEntry>& brauer_calibration() {
  static std::once_flag once;
  static std::vector<CalibrationEntry> table;
  std::call_once(once, [] {
    for (int k = 1; k <= 4; ++k) {
      SuperAlgebra r = matrix_algebra(k, FieldKind::Q);
      table.push_back({r.dim(), inertia(trace_form(r)).signature(), BrauerKind::R, r.name});
      SuperAlgebra h = tensor(quaternions(), matrix_algebra(k, FieldKind::Q));
      table.push_back({h.dim(), inertia(trace_form(h)).signature(), BrauerKind::H, "Mat_" + std::to_string(k) + "(H)"});
    }
  });
  return table;
}

namespace {

void require_central_simple(const SuperAlgebra& a, bool graded) {
  int zc = centre(a, graded).dim();
  if (zc != 1)
    throw ClassificationError(std::string(graded ? "supercentre" : "centre") + " has dimension " +
                              std::to_string(zc) + ", expected 1");
  auto sep = is_separable(a);
  if (!sep.separable)
    throw ClassificationError("not semisimple: trace-form radical of dimension " +
                              std::to_string(sep.radical.dim()));
}

}  // namespace

BrauerClass brauer_class_R(const SuperAlgebra& in) {
  SuperAlgebra a = ungraded(in);
  if (a.field() == FieldKind::QI) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (const auto& t : a.product(i, j))
          if (!t.second.is_real()) throw ClassificationError("algebra over R needs rational structure constants");
  }
  require_central_simple(a, false);
  const int sig = inertia(trace_form(a)).signature();
  for (const auto& e : brauer_calibration())
    if (e.dim == a.dim() && e.signature == sig) return {"R", e.kind, false};
  throw ClassificationError("trace-form signature " + std::to_string(sig) + " in dimension " +
                            std::to_string(a.dim()) + " is outside the calibrated range");
}

BrauerClass super_brauer_class_C(const SuperAlgebra& in) {
  SuperAlgebra a = in.field() == FieldKind::Q ? complexify(in) : in;
  require_central_simple(a, true);
  Subspace z = centre(a, false);
  if (z.dim() == 1) return {"C", BrauerKind::Even, true};
  if (z.dim() != 2) throw ClassificationError("ungraded centre of dimension " + std::to_string(z.dim()));
  // the two central idempotents must be exchanged by the parity automorphism
  SuperAlgebra zc = subalgebra(a, z);
  LinearMap parity;
  parity.matrix = identity_matrix(zc.dim());
  for (int i = 0; i < zc.dim(); ++i)
    if (zc.parity(i)) parity.matrix[i][i] = -1;
  SpectrumResult sp = spec_commutative(zc, {parity});
  if (sp.points() != 2 || sp.permutations[0] != std::vector<int>{1, 0})
    throw ClassificationError("central idempotents are not exchanged by parity");
  return {"C", BrauerKind::Odd, true};
}

RealFormResult real_form(int k, const QIMatrix& f) {
  if (k < 1 || static_cast<int>(f.size()) != k) throw ValidationError("real_form: f must be k x k");
  for (const auto& row : f)
    if (static_cast<int>(row.size()) != k) throw ValidationError("real_form: f must be k x k");
  auto finv = inverse(f);
  if (!finv) throw ValidationError("real_form: f is not invertible");
  QIMatrix ff = matmul(f, conj(f));
  QI lambda;
  if (!is_scalar_matrix(ff, &lambda))
    throw ValidationError("cocycle condition fails: f * conj(f) = " + render(ff) + " is not scalar");
  if (!lambda.is_real()) throw ValidationError("cocycle condition fails: f * conj(f) = " + render(ff));
  // real unknowns: Re and Im of each entry; equation f conj(a) - a f = 0
  const int n = k * k;
  auto to_matrix = [&](const QIVector& realvec) {
    QIMatrix m(k, QIVector(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[r][c] = QI(realvec[r * k + c].re, realvec[n + r * k + c].re);
    return m;
  };
  QIMatrix system(2 * n, QIVector(2 * n));
  for (int u = 0; u < 2 * n; ++u) {
    QIVector e(2 * n);
    e[u] = 1;
    QIMatrix am = to_matrix(e);
    QIMatrix d = matmul(f, conj(am));
    QIMatrix af = matmul(am, f);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        QI x = d[r][c] - af[r][c];
        system[r * k + c][u] = x.re;
        system[n + r * k + c][u] = x.im;
      }
  }
  std::vector<QIVector> fixed = nullspace(system, 2 * n);
  if (static_cast<int>(fixed.size()) != n)
    throw ValidationError("real_form: fixed algebra has dimension " + std::to_string(fixed.size()));
  // basis with the identity first
  QIVector one(2 * n);
  for (int r = 0; r < k; ++r) one[r * k + r] = 1;
  std::vector<QIVector> basis{one};
  for (const auto& v : fixed) {
    std::vector<QIVector> trial = basis;
    trial.push_back(v);
    QIMatrix t = trial;
    if (rank(t) == static_cast<int>(trial.size())) basis.push_back(v);
  }
  Coordinates co(basis, 2 * n);
  auto flatten = [&](const QIMatrix& m) {
    QIVector v(2 * n);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        v[r * k + c] = m[r][c].re;
        v[n + r * k + c] = m[r][c].im;
      }
    return v;
  };
  QIVector unit(n);
  unit[0] = 1;
  SuperAlgebra a(FieldKind::Q, std::vector<int>(n, 0), unit);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QIVector c = co.of(flatten(matmul(to_matrix(basis[i]), to_matrix(basis[j]))), basis);
      std::vector<SuperAlgebra::Term> terms;
      for (int l = 0; l < n; ++l)
        if (!c[l].is_zero()) terms.emplace_back(l, c[l]);
      a.set_product(i, j, std::move(terms));
    }
  a.name = "real form of Mat_" + std::to_string(k);
  RealFormResult out{a, brauer_class_R(a), lambda};
  return out;
}

QIVector LinearMap::apply(const QIVector& v) const {
  QIVector in = v;
  if (antilinear)
    for (auto& x : in) x = x.conj();
  QIVector out(matrix.size());
  for (std::size_t r = 0; r < matrix.size(); ++r)
    for (std::size_t c = 0; c < in.size(); ++c)
      if (!matrix[r][c].is_zero() && !in[c].is_zero()) out[r] += matrix[r][c] * in[c];
  return out;
}

SpectrumResult spec_commutative(const SuperAlgebra& in, const std::vector<LinearMap>& maps) {
  SuperAlgebra a = in.field() == FieldKind::Q ? complexify(in) : in;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (a.product(i, j) != a.product(j, i)) throw ValidationError("spec_commutative: algebra is not commutative");
  if (!is_separable(a).separable) throw ValidationError("spec_commutative: algebra is not separable");
  std::vector<QIVector> idem{a.unit()};
  for (int b = 0; b < n && static_cast<int>(idem.size()) < n; ++b) {
    std::vector<QIVector> next;
    for (const auto& e : idem) {
      QIVector y = a.mul(a.basis(b), e);
      // minimal polynomial of y in eA
      std::vector<QIVector> powers{e, y};
      QIVector rel;
      while (true) {
        QIMatrix cols(n, QIVector(powers.size()));
        for (std::size_t p = 0; p < powers.size(); ++p)
          for (int k = 0; k < n; ++k) cols[k][p] = powers[p][k];
        auto null = nullspace(cols, static_cast<int>(powers.size()));
        if (!null.empty()) {
          rel = null.front();
          break;
        }
        powers.push_back(a.mul(powers.back(), y));
      }
      QI lead = rel.back();
      for (auto& x : rel) x /= lead;
      QIVector rest;
      std::vector<QI> roots = gaussian_roots(rel, &rest);
      if (rest.size() > 1)
        throw UnsupportedInput("idempotents are not defined over Q(i): irreducible factor " + render_poly(rest));
      if (roots.size() == 1) {
        next.push_back(e);
        continue;
      }
      for (std::size_t j = 0; j < roots.size(); ++j) {
        QIVector ej = e;
        for (std::size_t l = 0; l < roots.size(); ++l) {
          if (l == j) continue;
          QIVector factor = y;
          for (int k = 0; k < n; ++k) factor[k] -= roots[l] * e[k];
          QI s = (roots[j] - roots[l]).inverse();
          for (auto& x : factor) x *= s;
          ej = a.mul(ej, factor);
        }
        next.push_back(ej);
      }
    }
    idem = std::move(next);
  }
  if (static_cast<int>(idem.size()) != n)
    throw UnsupportedInput("algebra does not split over Q(i)");
  std::sort(idem.begin(), idem.end(), [](const QIVector& x, const QIVector& y) {
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  });
  SpectrumResult out;
  out.idempotents = idem;
  for (const auto& m : maps) {
    std::vector<int> perm;
    for (const auto& e : idem) {
      QIVector img = m.apply(e);
      auto it = std::find(idem.begin(), idem.end(), img);
      if (it == idem.end()) throw ValidationError("supplied map does not permute the spectrum");
      perm.push_back(static_cast<int>(it - idem.begin()));
    }
    out.permutations.push_back(std::move(perm));
  }
  return out;
}

std::pair<SuperAlgebra, LinearMap> complex_numbers_over_r() {
  SuperAlgebra c(FieldKind::Q, {0, 0}, {1, 0});
  c.add_term(0, 0, 0, 1);
  c.add_term(0, 1, 1, 1);
  c.add_term(1, 0, 1, 1);
  c.add_term(1, 1, 0, -1);
  c.name = "C over R";
  LinearMap bar{{{1, 0}, {0, -1}}, false};
  return {c, bar};
}

}  // namespace ordcalc
