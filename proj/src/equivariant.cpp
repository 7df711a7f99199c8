#include "ordcalc/equivariant.hpp"

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

constexpr int kEscalations = 4;

std::vector<std::int64_t> pad_cone(const ConeComplex& cone, int k, const std::vector<std::int64_t>* alpha,
                                   const std::vector<std::int64_t>* beta) {
  std::vector<std::int64_t> v(cone.dim(k), 0);
  const std::int64_t off = cone.base().dim(k + 1);
  if (alpha) std::copy(alpha->begin(), alpha->end(), v.begin());
  if (beta) std::copy(beta->begin(), beta->end(), v.begin() + off);
  return v;
}

}  // namespace

EquivariantSetup equivariant_setup(const GSet& x, const FiniteGroup& g, const std::optional<TimeReversalTag>& tr,
                                   const CoeffModule& coeff, int lo, int hi, int n) {
  if (x.points == 0) throw ValidationError("empty G-set");
  if (tr) tr->validate(g);
  EquivariantSetup s;
  s.truncation = n;
  s.borel = borel_with_projection(x, g, n);
  s.point = cochain_complex(s.borel.base, tr);
  s.total = cochain_complex(s.borel.total, tr);
  s.cone = std::make_shared<const ConeComplex>(s.point, s.total, s.borel.projection);
  s.coeff = coeff;
  s.coeff.twist = tr;
  if (coeff.kind == CoeffModule::Kind::QmodZ && coeff.modulus == 0) {
    std::int64_t m = lcm64(auto_modulus(*s.point, lo, std::min(hi + 1, n - 1)),
                           auto_modulus(*s.total, lo, std::min(hi + 1, n - 1)));
    s.coeff.modulus = lcm64(m, auto_modulus(*s.cone, lo, std::min(hi, s.cone->top() - 1)));
  }
  return s;
}

std::vector<std::int64_t> ReducedEquivariantResult::anomaly_of(const std::vector<std::int64_t>& coords) const {
  std::vector<std::int64_t> out(point.orders.size() + point.divisible_rank, 0);
  for (std::size_t j = 0; j < coords.size() && j < connecting.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coords[j] * connecting[j][i];
  for (std::size_t i = 0; i < point.orders.size(); ++i)
    if (point.orders[i]) out[i] = mod_floor(out[i], point.orders[i]);
  return out;
}

ReducedEquivariantResult reduced_equivariant(const GSet& x, const FiniteGroup& g,
                                             const std::optional<TimeReversalTag>& tr, const CoeffModule& coeff,
                                             int k) {
  const int n = k + 2;
  CoeffModule c = coeff;
  for (int attempt = 0;; ++attempt) {
    try {
      EquivariantSetup s = equivariant_setup(x, g, tr, c, k, k, n);
      ReducedEquivariantResult r;
      r.coeff = s.coeff;
      r.truncation = n;
      r.reduced = complex_cohomology(s.cone, s.coeff, k);
      r.point = complex_cohomology(s.point, s.coeff, k + 1);
      const std::int64_t ya = s.point->dim(k + 1);
      for (const auto& gen : r.reduced.basis_generators) {
        std::vector<std::int64_t> alpha(gen.begin(), gen.begin() + ya);
        r.connecting.push_back(r.point.coordinates(alpha));
      }
      Orders po = r.point.orders;
      for (int i = 0; i < r.point.divisible_rank; ++i) po.push_back(0);
      r.anomaly_image = subgroup_generated(po, r.connecting);
      r.anomaly_nonzero = !r.anomaly_image.is_zero();
      return r;
    } catch (const ModulusEscalation& e) {
      if (attempt >= kEscalations || coeff.kind != CoeffModule::Kind::QmodZ) throw;
      c.modulus = e.suggested();
    }
  }
}

namespace {

enum class Slot { Point, Total, Reduced };

struct Term {
  Slot slot;
  std::string name;
  CohomologyResult h;
  Orders orders;
};

Orders orders_of(const CohomologyResult& h) {
  Orders o = h.orders;
  for (int i = 0; i < h.divisible_rank; ++i) o.push_back(0);
  return o;
}

}  // namespace

LesReport les_audit(const GSet& x, const FiniteGroup& g, const std::optional<TimeReversalTag>& tr,
                    const CoeffModule& coeff, int lo, int hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("les_audit: bad degree range");
  const int n = hi + 2;
  EquivariantSetup s = equivariant_setup(x, g, tr, coeff, lo, hi + 1, n);
  const CoeffModule& cf = s.coeff;
  const RingOps ring = cf.ring();
  // terms and maps in sequence order
  std::vector<Term> terms;
  std::vector<Vectors> maps;  // maps[i]: terms[i] -> terms[i+1], images of generators as coordinates
  auto add = [&](Slot sl, std::string name, CohomologyResult h) {
    Orders o = orders_of(h);
    terms.push_back({sl, std::move(name), std::move(h), std::move(o)});
  };
  for (int k = lo; k <= hi + 1; ++k) {
    const std::string d = std::to_string(k);
    add(Slot::Point, "H^" + d + "_G(pt)", complex_cohomology(s.point, cf, k));
    add(Slot::Total, "H^" + d + "_G(X)", complex_cohomology(s.total, cf, k));
    if (k <= hi) add(Slot::Reduced, "H~^" + d + "_G(X)", complex_cohomology(s.cone, cf, k));
  }
  const auto& proj = *s.borel.projection;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    Vectors imgs;
    const Term& a = terms[i];
    const Term& b = terms[i + 1];
    const int k = a.h.degree;
    for (const auto& gen : a.h.basis_generators) {
      std::vector<std::int64_t> img;
      if (a.slot == Slot::Point) {
        Cochain c = s.point->from_basis(k, cf, gen);
        img = s.total->to_basis(pullback(c, proj));
      } else if (a.slot == Slot::Total) {
        img = pad_cone(*s.cone, k, nullptr, &gen);
      } else {
        img.assign(gen.begin(), gen.begin() + s.point->dim(k + 1));
      }
      for (auto& v : img) v = ring.norm(v);
      imgs.push_back(b.h.coordinates(img));
    }
    maps.push_back(std::move(imgs));
  }
  LesReport rep;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    LesSlot slot{terms[i].name, terms[i].h.group, true};
    if (i > 0 && i + 1 < terms.size()) {
      const Term& t = terms[i];
      if (!t.h.group.is_finite()) throw std::invalid_argument("les_audit: infinite group at " + t.name);
      AbGroupExpr im = subgroup_generated(t.orders, maps[i - 1]);
      AbGroupExpr ker = kernel_group(t.orders, maps[i], terms[i + 1].orders);
      // composite must vanish and orders agree
      bool zero_composite = true;
      for (const auto& v : maps[i - 1]) {
        std::vector<std::int64_t> w(terms[i + 1].orders.size(), 0);
        for (std::size_t j = 0; j < v.size(); ++j)
          for (std::size_t l = 0; l < w.size(); ++l) w[l] += v[j] * maps[i][j][l];
        zero_composite = zero_composite && is_zero_element(terms[i + 1].orders, w);
      }
      slot.exact = zero_composite && im.order() == ker.order();
      if (!slot.exact && rep.ok) {
        rep.ok = false;
        rep.first_failure = t.name + ": image " + im.pretty() + ", kernel " + ker.pretty();
      }
    }
    rep.slots.push_back(std::move(slot));
  }
  return rep;
}

}  // namespace ordcalc
