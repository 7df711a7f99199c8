#include "ordcalc/cochain.hpp"

#include <numeric>
#include <sstream>

#include "ordcalc/error.hpp"

namespace ordcalc {

CoeffModule CoeffModule::mod(std::int64_t m) {
  if (m < 2) throw ValidationError("IntMod needs m >= 2");
  CoeffModule c;
  c.kind = Kind::IntMod;
  c.modulus = m;
  return c;
}

CoeffModule CoeffModule::qmodz(std::int64_t bound) {
  if (bound < 1) throw ValidationError("Q/Z denominator bound must be >= 1");
  CoeffModule c;
  c.kind = Kind::QmodZ;
  c.modulus = bound;
  return c;
}

bool CoeffModule::twist_nontrivial() const {
  if (!twist) return false;
  for (auto b : twist->orientation)
    if (b) return true;
  return false;
}

std::string CoeffModule::name() const {
  std::string s;
  switch (kind) {
    case Kind::Int: s = "Z"; break;
    case Kind::IntMod: s = "Z/" + std::to_string(modulus); break;
    case Kind::QmodZ: s = "Q/Z(" + std::to_string(modulus) + ")"; break;
  }
  return twist_nontrivial() ? s + " twisted" : s;
}

void CoeffModule::validate() const {
  if (kind == Kind::IntMod && modulus < 2) throw ValidationError("IntMod needs m >= 2");
  if (kind == Kind::QmodZ && modulus < 1) throw ValidationError("Q/Z bound must be >= 1");
}

// ---------------------------------------------------------------------------

Cochain Cochain::zero(const SimplicialComplexTrunc& cx, int k, const CoeffModule& c) {
  Cochain z;
  z.complex = cx;
  z.degree = k;
  z.coeff = c;
  z.values.assign(cx.count(k), 0);
  return z;
}

bool Cochain::is_zero() const {
  for (auto v : values)
    if (v != 0) return false;
  return true;
}

std::string Cochain::render_value(std::int64_t v) const {
  if (coeff.kind != CoeffModule::Kind::QmodZ) return std::to_string(v);
  std::int64_t m = coeff.modulus, n = mod_floor(v, m);
  if (n == 0) return "0";
  std::int64_t g = std::gcd(n, m);
  return std::to_string(n / g) + "/" + std::to_string(m / g);
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b) {
  if (!a.complex.same(b.complex)) throw std::invalid_argument("cochains live on different complexes");
  if (a.degree != b.degree) throw std::invalid_argument("cochain degrees differ");
  if (a.coeff.kind != b.coeff.kind || a.coeff.modulus != b.coeff.modulus)
    throw std::invalid_argument("cochain coefficient modules differ");
}

int edge_twist(const SimplicialComplexTrunc& cx, const TimeReversalTag& tw, int k, std::int64_t idx) {
  static const int first_edge[2] = {0, 1};
  Simplex e = cx.model().restrict(k, idx, std::span<const int>(first_edge, 2));
  if (e.degenerate()) return 0;
  int g = cx.model().edge_label(e.index);
  if (g == SimplicialModel::kIdentityEdge) return 0;
  if (g < 0) throw ValidationError("twisted coefficients need a nerve with group-labelled edges");
  return tw.orientation[g];
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  Cochain c = a;
  RingOps r = a.coeff.ring();
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = r.add(a.values[i], b.values[i]);
  return c;
}

Cochain scale(const Cochain& a, std::int64_t s) {
  Cochain c = a;
  RingOps r = a.coeff.ring();
  for (auto& v : c.values) v = r.mul(s, v);
  return c;
}

Cochain coboundary(const Cochain& a) {
  const auto& cx = a.complex;
  const int k = a.degree;
  if (k + 1 > cx.trunc()) throw TruncationError("coboundary needs truncation >= " + std::to_string(k + 1), k + 1);
  Cochain d = Cochain::zero(cx, k + 1, a.coeff);
  RingOps r = a.coeff.ring();
  const bool tw = a.coeff.twist_nontrivial();
  for (std::int64_t s = 0; s < cx.count(k + 1); ++s) {
    std::int64_t acc = 0;
    for (int j = 0; j <= k + 1; ++j) {
      std::int64_t v = a.value(cx.face(k + 1, s, j));
      if (v == 0) continue;
      bool neg = j & 1;
      if (j == 0 && tw && edge_twist(cx, *a.coeff.twist, k + 1, s)) neg = !neg;
      acc = r.add(acc, neg ? r.neg(v) : v);
    }
    d.values[s] = r.norm(acc);
  }
  return d;
}

bool is_cocycle(const Cochain& a) { return coboundary(a).is_zero(); }

Cochain pullback(const Cochain& a, const SimplicialMap& f) {
  if (!f.target().same(a.complex)) throw std::invalid_argument("pullback: cochain not on the map's target");
  Cochain p = Cochain::zero(f.source(), a.degree, a.coeff);
  for (std::int64_t s = 0; s < f.source().count(a.degree); ++s) p.values[s] = a.value(f.image(a.degree, s));
  return p;
}

Cochain change_coefficients(const Cochain& a, const CoeffModule& target) {
  using K = CoeffModule::Kind;
  Cochain c = a;
  c.coeff = target;
  const auto& from = a.coeff;
  std::int64_t factor = 1;
  if (from.kind == K::Int && target.kind == K::IntMod) {
    factor = 1;
  } else if (from.kind == K::IntMod && target.kind == K::IntMod) {
    if (from.modulus % target.modulus == 0)
      factor = 1;
    else if (target.modulus % from.modulus == 0)
      factor = target.modulus / from.modulus;
    else
      throw std::invalid_argument("no natural map between these cyclic coefficient groups");
  } else if ((from.kind == K::IntMod || from.kind == K::QmodZ) && target.kind == K::QmodZ) {
    if (target.modulus % from.modulus != 0)
      throw ModulusEscalation("Q/Z bound does not contain 1/" + std::to_string(from.modulus),
                              lcm64(target.modulus, from.modulus));
    factor = target.modulus / from.modulus;
  } else if (!(from.kind == target.kind && from.modulus == target.modulus)) {
    throw std::invalid_argument("unsupported coefficient change " + from.name() + " -> " + target.name());
  }
  RingOps r = target.ring();
  for (auto& v : c.values) v = r.mul(factor, v);
  return c;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const SparseIntMatrix> ComplexCache::matrix(int k, const std::function<SparseIntMatrix()>& build) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = matrices_.find(k);
    if (it != matrices_.end()) return it->second;
  }
  auto m = std::make_shared<const SparseIntMatrix>(build());
  std::lock_guard<std::mutex> lock(mu_);
  return matrices_.emplace(k, m).first->second;
}

std::shared_ptr<const SmithForm> ComplexCache::smith(int k, const std::function<SmithForm()>& build) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = smiths_.find(k);
    if (it != smiths_.end()) return it->second;
  }
  auto m = std::make_shared<const SmithForm>(build());
  std::lock_guard<std::mutex> lock(mu_);
  return smiths_.emplace(k, m).first->second;
}

std::shared_ptr<const SparseIntMatrix> CochainComplex::coboundary(int k) const {
  if (k + 1 > top())
    throw TruncationError("coboundary out of degree " + std::to_string(k) + " needs truncation >= " +
                              std::to_string(k + 1) + "; raise trunc",
                          k + 1);
  return cache().matrix(k, [&] {
    if (dim(k) == 0 && k < 0) {
      SparseIntMatrix z(dim(k + 1), 0);
      for (std::int64_t i = 0; i < dim(k + 1); ++i) z.append_row({});
      return z;
    }
    return build_coboundary(k);
  });
}

std::shared_ptr<const SmithForm> CochainComplex::smith(int k) const {
  auto m = coboundary(k);
  return cache().smith(k, [&] { return smith_normal_form(*m); });
}

// ---------------------------------------------------------------------------

namespace {

struct MemoEntry {
  std::shared_ptr<ComplexCache> cache;
  std::shared_ptr<const SubcomplexMask> keep;
};

std::string twist_key(const std::optional<TimeReversalTag>& t) {
  std::string s = "tw:";
  if (t)
    for (auto b : t->orientation) s += b ? '1' : '0';
  return s;
}

}  // namespace

SimplicialCochainComplex::SimplicialCochainComplex(SimplicialComplexTrunc cx, std::optional<TimeReversalTag> twist,
                                                   std::shared_ptr<const SubcomplexMask> relative)
    : cx_(std::move(cx)), rel_(std::move(relative)) {
  if (twist) {
    bool any = false;
    for (auto b : twist->orientation) any = any || b;
    if (any) twist_ = std::move(twist);
  }
  if (twist_ && cx_.count(1) > 0 && cx_.model().edge_label(0) < 0)
    throw ValidationError("twisted coefficients need a nerve with group-labelled edges");
  if (rel_) {
    basis_.assign(cx_.trunc() + 1, {});
    position_.assign(cx_.trunc() + 1, {});
    for (int k = 0; k <= cx_.trunc(); ++k) {
      position_[k].assign(cx_.count(k), -1);
      for (std::int64_t s = 0; s < cx_.count(k); ++s) {
        if ((*rel_)[k][s]) continue;
        position_[k][s] = static_cast<std::int64_t>(basis_[k].size());
        basis_[k].push_back(s);
      }
    }
  }
  std::ostringstream key;
  key << "cochains|" << twist_key(twist_) << "|rel:" << static_cast<const void*>(rel_.get());
  auto keep = rel_;
  auto entry = std::static_pointer_cast<MemoEntry>(cx_.model().memo(key.str(), [keep] {
    auto e = std::make_shared<MemoEntry>();
    e->cache = std::make_shared<ComplexCache>();
    e->keep = keep;
    return std::static_pointer_cast<void>(e);
  }));
  cache_ = entry->cache;
}

std::int64_t SimplicialCochainComplex::dim(int k) const {
  if (k < 0 || k > cx_.trunc()) return 0;
  return rel_ ? static_cast<std::int64_t>(basis_[k].size()) : cx_.count(k);
}

std::string SimplicialCochainComplex::name() const {
  std::string s = cx_.name();
  if (twist_) s += " (twisted)";
  if (rel_) s += " (relative)";
  return s;
}

int SimplicialCochainComplex::twist_bit(int k, std::int64_t idx) const {
  if (!twist_ || k < 1) return 0;
  return edge_twist(cx_, *twist_, k, idx);
}

std::vector<std::int64_t> SimplicialCochainComplex::to_basis(const Cochain& c) const {
  std::vector<std::int64_t> v(dim(c.degree));
  for (std::int64_t b = 0; b < dim(c.degree); ++b) v[b] = c.values[simplex_of(c.degree, b)];
  return v;
}

Cochain SimplicialCochainComplex::from_basis(int k, const CoeffModule& coeff, const std::vector<std::int64_t>& v) const {
  CoeffModule c = coeff;
  c.twist = twist_;
  Cochain out = Cochain::zero(cx_, k, c);
  RingOps r = coeff.ring();
  for (std::int64_t b = 0; b < dim(k); ++b) out.values[simplex_of(k, b)] = r.norm(v[b]);
  return out;
}

SparseIntMatrix SimplicialCochainComplex::build_coboundary(int k) const {
  SparseIntMatrix m(dim(k + 1), dim(k));
  std::vector<SparseEntry> row;
  for (std::int64_t b = 0; b < dim(k + 1); ++b) {
    row.clear();
    const std::int64_t s = simplex_of(k + 1, b);
    for (int j = 0; j <= k + 1; ++j) {
      Simplex f = cx_.face(k + 1, s, j);
      if (f.degenerate()) continue;
      std::int64_t col = basis_of(k, f.index);
      if (col < 0) continue;
      std::int64_t sign = (j & 1) ? -1 : 1;
      if (j == 0 && twist_bit(k + 1, s)) sign = -sign;
      row.push_back({static_cast<std::int32_t>(col), sign});
    }
    m.append_row(row);
  }
  return m;
}

std::shared_ptr<const SimplicialCochainComplex> cochain_complex(const SimplicialComplexTrunc& cx,
                                                                const std::optional<TimeReversalTag>& twist,
                                                                std::shared_ptr<const SubcomplexMask> relative) {
  return std::make_shared<const SimplicialCochainComplex>(cx, twist, std::move(relative));
}

// ---------------------------------------------------------------------------

ConeComplex::ConeComplex(std::shared_ptr<const SimplicialCochainComplex> y,
                         std::shared_ptr<const SimplicialCochainComplex> x, std::shared_ptr<const SimplicialMap> f)
    : y_(std::move(y)), x_(std::move(x)), f_(std::move(f)), cache_(std::make_shared<ComplexCache>()) {
  if (!f_->source().same(x_->simplicial()) || !f_->target().same(y_->simplicial()))
    throw std::invalid_argument("cone: map does not match the complexes");
}

SparseIntMatrix ConeComplex::build_coboundary(int k) const {
  const std::int64_t col_y = y_->dim(k + 1);
  SparseIntMatrix m(dim(k + 1), dim(k));
  auto dy = y_->coboundary(k + 1);
  for (std::int64_t i = 0; i < dy->rows(); ++i) {
    std::vector<SparseEntry> row;
    for (const auto& e : dy->row(i)) row.push_back({e.col, -e.val});
    m.append_row(std::move(row));
  }
  std::shared_ptr<const SparseIntMatrix> dx;
  if (k >= 0) dx = x_->coboundary(k);
  for (std::int64_t b = 0; b < x_->dim(k + 1); ++b) {
    std::vector<SparseEntry> row;
    Simplex im = f_->image(k + 1, x_->simplex_of(k + 1, b));
    if (!im.degenerate()) {
      std::int64_t c = y_->basis_of(k + 1, im.index);
      if (c >= 0) row.push_back({static_cast<std::int32_t>(c), 1});
    }
    if (dx)
      for (const auto& e : dx->row(b)) row.push_back({static_cast<std::int32_t>(col_y + e.col), e.val});
    m.append_row(std::move(row));
  }
  return m;
}

std::pair<Cochain, Cochain> ConeComplex::split(int k, const CoeffModule& coeff, const std::vector<std::int64_t>& v) const {
  const std::int64_t col_y = y_->dim(k + 1);
  std::vector<std::int64_t> a(v.begin(), v.begin() + col_y), b(v.begin() + col_y, v.end());
  return {y_->from_basis(k + 1, coeff, a), x_->from_basis(k, coeff, b)};
}

}  // namespace ordcalc
