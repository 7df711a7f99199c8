#include "ordcalc/smith.hpp"

#include <algorithm>
#include <random>

#include "ordcalc/error.hpp"

namespace ordcalc {

std::int64_t RingOps::norm(std::int64_t a) const { return m == 0 ? a : mod_floor(a, m); }

std::int64_t RingOps::add(std::int64_t a, std::int64_t b) const {
  if (m == 0) return checked_add(a, b);
  return norm(a + b);
}

std::int64_t RingOps::mul(std::int64_t a, std::int64_t b) const {
  if (m == 0) return checked_mul(a, b);
  __int128 p = static_cast<__int128>(norm(a)) * norm(b);
  return static_cast<std::int64_t>(p % m);
}

void SparseIntMatrix::append_row(std::vector<SparseEntry> e) {
  std::sort(e.begin(), e.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.col < y.col; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (w > 0 && e[w - 1].col == e[i].col)
      e[w - 1].val = checked_add(e[w - 1].val, e[i].val);
    else
      e[w++] = e[i];
  }
  e.resize(w);
  for (const auto& x : e)
    if (x.val != 0) entries_.push_back(x);
  row_ptr_.push_back(static_cast<std::int64_t>(entries_.size()));
}

std::vector<std::int64_t> SparseIntMatrix::apply(std::span<const std::int64_t> x, const RingOps& r) const {
  std::vector<std::int64_t> y(rows(), 0);
  for (std::int64_t i = 0; i < rows(); ++i) {
    std::int64_t s = 0;
    for (const auto& e : row(i))
      if (x[e.col] != 0) s = r.add(s, r.mul(e.val, x[e.col]));
    y[i] = r.norm(s);
  }
  return y;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<std::vector<SparseEntry>> cols(cols_);
  for (std::int64_t i = 0; i < rows(); ++i)
    for (const auto& e : row(i)) cols[e.col].push_back({static_cast<std::int32_t>(i), e.val});
  SparseIntMatrix t(cols_, rows());
  for (auto& c : cols) t.append_row(std::move(c));
  return t;
}

SparseIntMatrix to_sparse(const DenseMatrix& m, std::int64_t cols) {
  SparseIntMatrix s(static_cast<std::int64_t>(m.size()), cols);
  for (const auto& row : m) {
    std::vector<SparseEntry> e;
    for (std::int64_t j = 0; j < cols; ++j)
      if (row[j] != 0) e.push_back({static_cast<std::int32_t>(j), row[j]});
    s.append_row(std::move(e));
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

inline void apply_pair(std::span<std::int64_t> v, std::int64_t i, std::int64_t j, std::int64_t a, std::int64_t b,
                       std::int64_t c, std::int64_t d, const RingOps& r) {
  if (i == j) {
    v[i] = r.mul(a, v[i]);
    return;
  }
  std::int64_t vi = v[i], vj = v[j];
  if (vi == 0 && vj == 0) return;
  v[i] = r.add(r.mul(a, vi), r.mul(b, vj));
  v[j] = r.add(r.mul(c, vi), r.mul(d, vj));
}

}  // namespace

void SmithForm::finalize() {
  row_pivot_slot.assign(rows, -1);
  col_pivot_slot.assign(cols, -1);
  for (std::size_t s = 0; s < invariant.size(); ++s) {
    row_pivot_slot[pivot_row[s]] = static_cast<std::int64_t>(s);
    col_pivot_slot[pivot_col[s]] = static_cast<std::int64_t>(s);
  }
}

void SmithForm::apply_row_ops(std::span<std::int64_t> v, const RingOps& r) const {
  for (const auto& o : row_ops) apply_pair(v, o.i, o.j, o.a, o.b, o.c, o.d, r);
}

void SmithForm::apply_row_ops_inverse(std::span<std::int64_t> v, const RingOps& r) const {
  for (auto it = row_ops.rbegin(); it != row_ops.rend(); ++it) {
    const auto& o = *it;
    if (o.i == o.j) {
      v[o.i] = r.mul(o.a, v[o.i]);
      continue;
    }
    const std::int64_t det = o.a * o.d - o.b * o.c;
    apply_pair(v, o.i, o.j, det * o.d, -det * o.b, -det * o.c, det * o.a, r);
  }
}

void SmithForm::apply_col_transform(std::span<std::int64_t> y, const RingOps& r) const {
  for (auto it = col_ops.rbegin(); it != col_ops.rend(); ++it) {
    const auto& o = *it;
    apply_pair(y, o.i, o.j, o.a, o.c, o.b, o.d, r);
  }
}

void SmithForm::apply_col_transform_inverse(std::span<std::int64_t> x, const RingOps& r) const {
  for (const auto& o : col_ops) {
    if (o.i == o.j) {
      x[o.i] = r.mul(o.a, x[o.i]);
      continue;
    }
    const std::int64_t det = o.a * o.d - o.b * o.c;
    apply_pair(x, o.i, o.j, det * o.d, -det * o.c, -det * o.b, det * o.a, r);
  }
}

// ---------------------------------------------------------------------------

namespace {

struct ExtGcd {
  std::int64_t g, s, u;  // s*a + u*b = g > 0
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void dense_phase(DenseMatrix& M, const std::vector<std::int64_t>& rmap, const std::vector<std::int64_t>& cmap,
                 SmithForm& F) {
  const std::size_t m = M.size(), n = cmap.size();
  auto rowop = [&](std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (i == j) {
      for (std::size_t k = 0; k < n; ++k) M[i][k] = checked_mul(a, M[i][k]);
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        std::int64_t x = M[i][k], y = M[j][k];
        if (x == 0 && y == 0) continue;
        M[i][k] = checked_add(checked_mul(a, x), checked_mul(b, y));
        M[j][k] = checked_add(checked_mul(c, x), checked_mul(d, y));
      }
    }
    F.row_ops.push_back({rmap[i], rmap[j], a, b, c, d});
  };
  auto colop = [&](std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    for (std::size_t k = 0; k < m; ++k) {
      std::int64_t x = M[k][i], y = M[k][j];
      if (x == 0 && y == 0) continue;
      M[k][i] = checked_add(checked_mul(a, x), checked_mul(b, y));
      M[k][j] = checked_add(checked_mul(c, x), checked_mul(d, y));
    }
    F.col_ops.push_back({cmap[i], cmap[j], a, b, c, d});
  };
  std::size_t t = 0;
  while (t < m && t < n) {
    std::size_t bi = m, bj = n;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        std::int64_t v = M[i][j] < 0 ? -M[i][j] : M[i][j];
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) break;
    if (bi != t) rowop(t, bi, 0, 1, 1, 0);
    if (bj != t) colop(t, bj, 0, 1, 1, 0);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (M[i][t] == 0) continue;
        std::int64_t a = M[t][t], b = M[i][t];
        if (b % a == 0) {
          rowop(i, t, 1, -(b / a), 0, 1);
        } else {
          ExtGcd e = ext_gcd(a, b);
          rowop(t, i, e.s, e.u, -b / e.g, a / e.g);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (M[t][j] == 0) continue;
        std::int64_t a = M[t][t], b = M[t][j];
        if (b % a == 0) {
          colop(j, t, 1, -(b / a), 0, 1);
        } else {
          ExtGcd e = ext_gcd(a, b);
          colop(t, j, e.s, e.u, -b / e.g, a / e.g);
          dirty = true;
        }
      }
      if (dirty) continue;
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = M[i][t] == 0;
      for (std::size_t j = t + 1; j < n && clean; ++j) clean = M[t][j] == 0;
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (M[i][j] % M[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      rowop(t, bad, 1, 1, 0, 1);
    }
    if (M[t][t] < 0) rowop(t, t, -1, 0, 0, 0);
    F.pivot_row.push_back(rmap[t]);
    F.pivot_col.push_back(cmap[t]);
    F.invariant.push_back(M[t][t]);
    ++t;
  }
}

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& A) {
  SmithForm F;
  F.rows = A.rows();
  F.cols = A.cols();
  const std::int64_t R = A.rows(), C = A.cols();
  std::vector<std::vector<SparseEntry>> rows(R);
  std::vector<std::vector<std::int32_t>> colrows(C);
  for (std::int64_t i = 0; i < R; ++i) {
    auto r = A.row(i);
    rows[i].assign(r.begin(), r.end());
    for (const auto& e : r) colrows[e.col].push_back(static_cast<std::int32_t>(i));
  }
  std::vector<char> alive(R, 1);
  std::vector<std::int64_t> stamp(R, -1);
  std::int64_t epoch = 0;
  auto value_at = [&](std::int64_t r, std::int32_t c) -> std::int64_t {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::int32_t col) { return e.col < col; });
    return it != row.end() && it->col == c ? it->val : 0;
  };
  std::vector<SparseEntry> merged;
  std::vector<std::int32_t> pending(C);
  for (std::int64_t j = 0; j < C; ++j) pending[j] = static_cast<std::int32_t>(j);
  std::vector<std::int32_t> cand;
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<std::int32_t> deferred;
    for (std::int32_t j : pending) {
      ++epoch;
      cand.clear();
      auto& cr = colrows[j];
      std::size_t w = 0;
      for (std::int32_t r : cr) {
        if (!alive[r] || stamp[r] == epoch) continue;
        stamp[r] = epoch;
        if (value_at(r, j) != 0) {
          cand.push_back(r);
          cr[w++] = r;
        }
      }
      cr.resize(w);
      if (cand.empty()) continue;
      std::int64_t p = -1;
      std::size_t plen = 0;
      for (std::int32_t r : cand) {
        std::int64_t v = value_at(r, j);
        if ((v == 1 || v == -1) && (p < 0 || rows[r].size() < plen)) {
          p = r;
          plen = rows[r].size();
        }
      }
      if (p < 0) {
        deferred.push_back(j);
        continue;
      }
      progress = true;
      const std::int64_t vp = value_at(p, j);
      const auto& prow = rows[p];
      for (std::int32_t t : cand) {
        if (t == p) continue;
        const std::int64_t mult = -value_at(t, j) * vp;
        auto& trow = rows[t];
        merged.clear();
        std::size_t a = 0, b = 0;
        while (a < trow.size() || b < prow.size()) {
          if (b == prow.size() || (a < trow.size() && trow[a].col < prow[b].col)) {
            merged.push_back(trow[a++]);
          } else if (a == trow.size() || prow[b].col < trow[a].col) {
            merged.push_back({prow[b].col, checked_mul(mult, prow[b].val)});
            colrows[prow[b].col].push_back(t);
            ++b;
          } else {
            std::int64_t v = checked_add(trow[a].val, checked_mul(mult, prow[b].val));
            if (v != 0) merged.push_back({trow[a].col, v});
            ++a;
            ++b;
          }
        }
        trow.swap(merged);
        F.row_ops.push_back({t, p, 1, mult, 0, 1});
      }
      for (const auto& e : prow)
        if (e.col != j) F.col_ops.push_back({e.col, j, 1, -e.val * vp, 0, 1});
      if (vp == -1) F.row_ops.push_back({p, p, -1, 0, 0, 0});
      F.pivot_row.push_back(p);
      F.pivot_col.push_back(j);
      F.invariant.push_back(1);
      alive[p] = 0;
      std::vector<SparseEntry>().swap(rows[p]);
      std::vector<std::int32_t>().swap(colrows[j]);
    }
    pending.swap(deferred);
  }
  if (!pending.empty()) {
    std::sort(pending.begin(), pending.end());
    std::vector<std::int64_t> cmap(pending.begin(), pending.end());
    std::vector<std::int64_t> cpos(C, -1);
    for (std::size_t k = 0; k < cmap.size(); ++k) cpos[cmap[k]] = static_cast<std::int64_t>(k);
    std::vector<std::int64_t> rmap;
    DenseMatrix M;
    for (std::int64_t i = 0; i < R; ++i) {
      if (!alive[i] || rows[i].empty()) continue;
      std::vector<std::int64_t> line(cmap.size(), 0);
      for (const auto& e : rows[i]) {
        if (cpos[e.col] < 0) throw std::logic_error("smith: residual entry outside deferred columns");
        line[cpos[e.col]] = e.val;
      }
      rmap.push_back(i);
      M.push_back(std::move(line));
    }
    dense_phase(M, rmap, cmap, F);
  }
  F.finalize();
  return F;
}

bool audit_smith(const SparseIntMatrix& A, const SmithForm& F, int probes) {
  auto expected = [&](std::span<const std::int64_t> y, const RingOps& r) {
    std::vector<std::int64_t> d(A.rows(), 0);
    for (std::size_t s = 0; s < F.invariant.size(); ++s) d[F.pivot_row[s]] = r.mul(F.invariant[s], y[F.pivot_col[s]]);
    return d;
  };
  if (probes <= 0) {
    RingOps z{0};
    for (std::int64_t j = 0; j < A.cols(); ++j) {
      std::vector<std::int64_t> y(A.cols(), 0);
      y[j] = 1;
      std::vector<std::int64_t> e = expected(y, z);
      F.apply_col_transform(y, z);
      std::vector<std::int64_t> x = A.apply(y, z);
      F.apply_row_ops(x, z);
      if (x != e) return false;
    }
    return true;
  }
  RingOps p{(std::int64_t{1} << 61) - 1};
  std::mt19937_64 rng(12345);
  for (int t = 0; t < probes; ++t) {
    std::vector<std::int64_t> y(A.cols());
    for (auto& v : y) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p.m));
    std::vector<std::int64_t> e = expected(y, p);
    F.apply_col_transform(y, p);
    std::vector<std::int64_t> x = A.apply(y, p);
    F.apply_row_ops(x, p);
    if (x != e) return false;
  }
  return true;
}

}  // namespace ordcalc
