#include "ordcalc/lattice.hpp"

#include <stdexcept>

#include "ordcalc/error.hpp"
#include "ordcalc/smith.hpp"

namespace ordcalc {

namespace {

// columns given as vectors of length n
SparseIntMatrix from_columns(std::size_t n, const Vectors& cols) {
  SparseIntMatrix m(static_cast<std::int64_t>(n), static_cast<std::int64_t>(cols.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseEntry> row;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[j][i] != 0) row.push_back({static_cast<std::int32_t>(j), cols[j][i]});
    m.append_row(std::move(row));
  }
  return m;
}

Vectors with_relations(const Orders& orders, const Vectors& gens, int sign) {
  Vectors cols = gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    std::vector<std::int64_t> c(orders.size(), 0);
    c[i] = sign * orders[i];
    cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

AbGroupExpr quotient_by(const Orders& orders, const Vectors& gens) {
  const std::size_t n = orders.size();
  for (const auto& g : gens)
    if (g.size() != n) throw std::invalid_argument("quotient_by: dimension mismatch");
  Vectors cols = with_relations(orders, gens, 1);
  SmithForm s = smith_normal_form(from_columns(n, cols));
  Orders out;
  for (auto d : s.invariant)
    if (d > 1) out.push_back(d);
  for (std::size_t i = static_cast<std::size_t>(s.rank()); i < n; ++i) out.push_back(0);
  return AbGroupExpr::from_cyclic_orders(out);
}

Vectors kernel_generators(const Orders& source, const Vectors& images, const Orders& target,
                          const Vectors& relations) {
  const std::size_t m = source.size(), n = target.size();
  if (images.size() != m) throw std::invalid_argument("kernel_generators: one image per source generator");
  Vectors cols = with_relations(target, images, -1);
  for (const auto& r : relations) {
    if (r.size() != n) throw std::invalid_argument("kernel_generators: relation dimension mismatch");
    cols.push_back(r);
  }
  const std::size_t total = cols.size();
  SmithForm s = smith_normal_form(from_columns(n, cols));
  Vectors out;
  for (std::size_t j = 0; j < total; ++j) {
    if (s.col_pivot_slot[j] >= 0) continue;
    std::vector<std::int64_t> y(total, 0);
    y[j] = 1;
    s.apply_col_transform(y, RingOps{0});
    std::vector<std::int64_t> c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m));
    bool zero = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (source[i]) c[i] = mod_floor(c[i], source[i]);
      zero = zero && c[i] == 0;
    }
    if (!zero) out.push_back(std::move(c));
  }
  return out;
}

AbGroupExpr subgroup_generated(const Orders& orders, const Vectors& gens, const Vectors& relations) {
  if (gens.empty()) return AbGroupExpr::zero();
  Orders free(gens.size(), 0);
  Vectors k = kernel_generators(free, gens, orders, relations);
  return quotient_by(free, k);
}

AbGroupExpr kernel_group(const Orders& source, const Vectors& images, const Orders& target) {
  return subgroup_generated(source, kernel_generators(source, images, target));
}

bool is_zero_element(const Orders& orders, const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0 ? v[i] != 0 : v[i] % orders[i] != 0) return false;
  }
  return true;
}

}  // namespace ordcalc
