#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ordcalc/abgroup.hpp"
#include "ordcalc/cochain.hpp"

namespace ordcalc {

struct CohomologyDetail;

// H^k of a cochain complex with explicit generators and a coordinate map.
class CohomologyResult {
 public:
  AbGroupExpr group;
  int degree = 0;
  CoeffModule coeff;
  // concrete cyclic generators: order per generator (0 = infinite cyclic)
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> basis_generators;  // in complex basis coordinates
  int divisible_rank = 0;                                   // Q/Z only: summands rendered as C^x
  std::vector<Cochain> generators;                          // simplicial complexes
  std::vector<std::pair<Cochain, Cochain>> pair_generators;  // cones: (alpha, beta)
  std::shared_ptr<const CochainComplex> complex;

  // Coordinates of a cocycle: one entry per concrete generator (mod its
  // order), followed by the divisible coordinates (numerators mod M).
  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& basis_vector) const;
  std::vector<std::int64_t> coordinates(const Cochain& c) const;
  bool is_trivial_class(const std::vector<std::int64_t>& basis_vector) const;
  // Smith data of delta_k (for audits)
  std::shared_ptr<const SmithForm> forward_smith() const;

 private:
  friend CohomologyResult complex_cohomology(std::shared_ptr<const CochainComplex>, const CoeffModule&, int);
  std::shared_ptr<const CohomologyDetail> detail_;
};

CohomologyResult complex_cohomology(std::shared_ptr<const CochainComplex> cx, const CoeffModule& coeff, int k);
// The coefficient twist (if any) is taken from coeff.twist.
CohomologyResult cohomology(const SimplicialComplexTrunc& cx, const CoeffModule& coeff, int k);
CohomologyResult relative_cohomology(const SimplicialComplexTrunc& cx, std::shared_ptr<const SubcomplexMask> sub,
                                     const CoeffModule& coeff, int k);

// Membership in B^k using only the Smith form of delta_{k-1}.
bool in_coboundaries(const CochainComplex& cx, int k, const CoeffModule& coeff, std::vector<std::int64_t> x);
bool is_coboundary(const Cochain& c);
bool is_coboundary(const Cochain& c, std::shared_ptr<const SubcomplexMask> sub);

// Q/Z bound: twice the lcm of the invariant factors of delta_j, j in [lo-1, hi].
std::int64_t auto_modulus(const CochainComplex& cx, int lo, int hi);
CoeffModule auto_qmodz(const SimplicialComplexTrunc& cx, int k, const std::optional<TimeReversalTag>& twist = {});

// Integral homology H_p (for universal coefficients), from the Smith forms.
AbGroupExpr integral_homology(const CochainComplex& cx, int p);

}  // namespace ordcalc
