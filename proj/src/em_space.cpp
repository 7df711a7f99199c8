#include "ordcalc/em_space.hpp"

#include <array>
#include <sstream>

#include "ordcalc/cohomology.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/steenrod.hpp"

namespace ordcalc {

int EM2Model::triple(std::uint32_t code, int i, int j, int l) {
  int v = code >> pair_bit(j, l) & 1u;
  if (i == 0) return v;
  return v ^ (code >> pair_bit(i, l) & 1u) ^ (code >> pair_bit(i, j) & 1u);
}

bool EM2Model::degenerate_at(std::uint32_t code, int k, int p) {
  for (int x = 0; x < p; ++x)
    if (triple(code, x, p, p + 1)) return false;
  for (int y = p + 2; y <= k; ++y)
    if (triple(code, p, p + 1, y)) return false;
  return true;
}

EM2Model::EM2Model(int trunc) : trunc_(trunc) {
  if (trunc < 0 || trunc > kMaxTrunc)
    throw UnsupportedInput("K(Z2,2) model supports truncation 0.." + std::to_string(kMaxTrunc));
  check_truncation_cap(trunc);
  codes_.assign(trunc + 1, {});
  index_.assign(trunc + 1, {});
  for (int k = 0; k <= trunc; ++k) {
    const int bits = k * (k - 1) / 2;
    const std::uint32_t n = 1u << bits;
    index_[k].assign(n, -1);
    for (std::uint32_t c = 0; c < n; ++c) {
      bool nd = true;
      for (int p = 0; p < k && nd; ++p) nd = !degenerate_at(c, k, p);
      if (!nd) continue;
      index_[k][c] = static_cast<std::int32_t>(codes_[k].size());
      codes_[k].push_back(c);
    }
  }
}

Simplex EM2Model::restrict(int k, std::int64_t idx, std::span<const int> vertices) const {
  const std::uint32_t c = codes_[k][idx];
  const int m = static_cast<int>(vertices.size()) - 1;
  std::uint32_t full = 0;
  for (int j = 2; j <= m; ++j)
    for (int i = 1; i < j; ++i)
      if (triple(c, vertices[0], vertices[i], vertices[j])) full |= 1u << pair_bit(i, j);
  std::uint32_t collapsed = 0;
  for (int p = 0; p < m; ++p)
    if (degenerate_at(full, m, p)) collapsed |= 1u << p;
  if (!collapsed) return Simplex{m, index_[m][full], 0};
  std::array<int, kMaxTrunc + 1> keep{};
  int d = 0;
  keep[d++] = 0;
  for (int j = 1; j <= m; ++j)
    if (!(collapsed >> (j - 1) & 1u)) keep[d++] = j;
  std::uint32_t base = 0;
  for (int j = 2; j < d; ++j)
    for (int i = 1; i < j; ++i)
      if (triple(full, 0, keep[i], keep[j])) base |= 1u << pair_bit(i, j);
  std::int32_t id = index_[d - 1][base];
  if (id < 0) throw std::logic_error("K(Z2,2): degeneracy reduction left a degenerate simplex");
  return Simplex{m, id, collapsed};
}

std::string EM2Model::describe(int k, std::int64_t idx) const {
  std::ostringstream os;
  os << "{";
  const std::uint32_t c = codes_[k][idx];
  bool first = true;
  for (int j = 2; j <= k; ++j)
    for (int i = 1; i < j; ++i)
      if (c >> pair_bit(i, j) & 1u) {
        os << (first ? "" : ",") << "0" << i << j;
        first = false;
      }
  os << "}";
  return os.str();
}

EMSpace em(int level, int n) {
  if (level != 1 && level != 2) throw ValidationError("em: level must be 1 or 2");
  if (n < level) throw TruncationError("em: degree bound must be at least the level", level);
  EMSpace e;
  e.level = level;
  if (level == 1) {
    e.underlying = nerve(FiniteGroup::cyclic(2), n);
  } else {
    e.underlying = SimplicialComplexTrunc(std::make_shared<EM2Model>(n));
  }
  e.fundamental = Cochain::zero(e.underlying, level, CoeffModule::mod(2));
  // the unique nondegenerate simplex in degree `level` (the non-identity edge, or code 1)
  if (e.underlying.count(level) != 1) throw std::logic_error("em: unexpected simplex count in the fundamental degree");
  e.fundamental.values[0] = 1;
  return e;
}

ProductBase product_base(const FiniteGroup& g, int n) {
  if (n < 2) throw TruncationError("product_base needs n >= 2", 2);
  auto bg = nerve(g, n);
  EMSpace e = em(2, n);
  ProductBase pb;
  pb.complex = SimplicialComplexTrunc(std::make_shared<ProductModel>(bg, e.underlying, n));
  pb.to_group = std::make_shared<ProjectionMap>(pb.complex, 0);
  pb.to_em = std::make_shared<ProjectionMap>(pb.complex, 1);
  pb.t = pullback(e.fundamental, *pb.to_em);
  return pb;
}

namespace {

// rank over GF(2) of small integer vectors
int gf2_rank(std::vector<std::vector<std::int64_t>> rows) {
  int rank = 0;
  const std::size_t w = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < w; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][col] & 1)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && (rows[r][col] & 1))
        for (std::size_t c = 0; c < w; ++c) rows[r][c] ^= rows[rank][c] & 1;
    ++rank;
  }
  return rank;
}

}  // namespace

SteenrodBasisReport verify_steenrod_basis(const EMSpace& e, int n) {
  if (e.level != 2) throw ValidationError("verify_steenrod_basis: needs the level-2 space");
  if (n > 7) throw ValidationError("verify_steenrod_basis: n <= 7");
  if (e.underlying.trunc() < n + 2)
    throw TruncationError("verify_steenrod_basis needs truncation >= n+2", n + 2);
  SteenrodBasisReport rep;
  // generators: t (2), u = Sq^1 t (3), v = Sq^2 Sq^1 t (5)
  const Cochain& t = e.fundamental;
  Cochain u = sq(1, t);
  Cochain v = n >= 5 ? sq(2, u) : Cochain{};
  struct Mono {
    std::string name;
    int a, b, c;  // exponents of t, u, v
  };
  for (int k = 0; k <= n; ++k) {
    std::vector<Mono> ms;
    for (int c = 0; 5 * c <= k; ++c)
      for (int b = 0; 3 * b + 5 * c <= k; ++b)
        if ((k - 3 * b - 5 * c) % 2 == 0) {
          int a = (k - 3 * b - 5 * c) / 2;
          std::string nm;
          auto add = [&](const char* s, int ex) {
            if (!ex) return;
            if (!nm.empty()) nm += "*";
            nm += s;
            if (ex > 1) nm += "^" + std::to_string(ex);
          };
          add("t", a);
          add("Sq1t", b);
          add("Sq2Sq1t", c);
          ms.push_back({nm.empty() ? "1" : nm, a, b, c});
        }
    rep.expected.push_back(static_cast<int>(ms.size()));
    CohomologyResult h = cohomology(e.underlying, CoeffModule::mod(2), k);
    rep.computed.push_back(static_cast<int>(h.orders.size()));
    std::vector<std::string> names;
    std::vector<std::vector<std::int64_t>> coords;
    for (const auto& m : ms) {
      Cochain x = Cochain::zero(e.underlying, 0, CoeffModule::mod(2));
      x.values[0] = 1;
      for (int i = 0; i < m.a; ++i) x = cup(x, t);
      for (int i = 0; i < m.b; ++i) x = cup(x, u);
      for (int i = 0; i < m.c; ++i) x = cup(x, v);
      names.push_back(m.name);
      coords.push_back(h.coordinates(x));
    }
    int rk = gf2_rank(coords);
    rep.monomials.push_back(names);
    rep.coordinates.push_back(coords);
    if (rep.ok && (rep.computed.back() != rep.expected.back() || rk != rep.expected.back())) {
      rep.ok = false;
      rep.failed_degree = k;
      rep.message = "degree " + std::to_string(k) + ": dim H = " + std::to_string(rep.computed.back()) +
                    ", monomials = " + std::to_string(rep.expected.back()) + ", rank = " + std::to_string(rk);
    }
  }
  return rep;
}

EMBetti em_betti(int level, int n) {
  EMSpace e = em(level, n);
  EMBetti b;
  for (int k = 0; k <= n; ++k) b.simplices.push_back(e.underlying.count(k));
  for (int k = 0; k + 1 <= n; ++k) {
    b.z2_dims.push_back(static_cast<int>(cohomology(e.underlying, CoeffModule::mod(2), k).orders.size()));
    b.qz_groups.push_back(cohomology(e.underlying, auto_qmodz(e.underlying, k), k).group.cell());
  }
  return b;
}

}  // namespace ordcalc
