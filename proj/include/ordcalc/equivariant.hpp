#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/cohomology.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/lattice.hpp"
#include "ordcalc/simplicial.hpp"

namespace ordcalc {

// Q/Z with a bound of 0 means "choose the bound"; see resolve_qmodz.
inline CoeffModule cstar_coefficients(const std::optional<TimeReversalTag>& tr = {}) {
  CoeffModule c;
  c.kind = CoeffModule::Kind::QmodZ;
  c.modulus = 0;
  c.twist = tr;
  return c;
}

// Cone of pi^* : C(BG) -> C(X//G), with the pieces needed for the long exact sequence.
struct EquivariantSetup {
  BorelData borel;
  std::shared_ptr<const SimplicialCochainComplex> point, total;
  std::shared_ptr<const ConeComplex> cone;
  CoeffModule coeff;  // resolved (bound fixed)
  int truncation = 0;
};
// Truncation n; a Q/Z bound of 0 is replaced by an automatic bound covering degrees lo..hi.
EquivariantSetup equivariant_setup(const GSet& x, const FiniteGroup& g, const std::optional<TimeReversalTag>& tr,
                                   const CoeffModule& coeff, int lo, int hi, int n);

struct ReducedEquivariantResult {
  CohomologyResult reduced;  // pair generators (alpha, beta)
  CohomologyResult point;    // H^{k+1}_G(pt)
  // coordinates of [alpha] in `point` for each reduced generator (connecting map)
  Vectors connecting;
  AbGroupExpr anomaly_image;
  bool anomaly_nonzero = false;
  CoeffModule coeff;
  int truncation = 0;

  std::vector<std::int64_t> anomaly_of(const std::vector<std::int64_t>& coords) const;
};

ReducedEquivariantResult reduced_equivariant(const GSet& x, const FiniteGroup& g,
                                             const std::optional<TimeReversalTag>& tr, const CoeffModule& coeff,
                                             int k);

struct LesSlot {
  std::string term;  // e.g. "H^2_G(X)"
  AbGroupExpr group;
  bool exact = true;
};
struct LesReport {
  bool ok = true;
  std::string first_failure;
  std::vector<LesSlot> slots;
};
// Exactness of H^k_G(pt) -> H^k_G(X) -> H~^k_G(X) -> H^{k+1}_G(pt) -> ... for k in [lo, hi].
// Groups must be finite (positive degrees with torsion coefficients).
LesReport les_audit(const GSet& x, const FiniteGroup& g, const std::optional<TimeReversalTag>& tr,
                    const CoeffModule& coeff, int lo, int hi);

}  // namespace ordcalc
