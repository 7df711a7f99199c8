#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ordcalc/cochain.hpp"
#include "ordcalc/simplicial.hpp"

namespace ordcalc {

// K(Z/2, 2) as normalised Z/2 2-cocycles on the standard simplices.  A
// k-simplex is packed as the bits f(0,i,j), 1 <= i < j <= k, with the pair
// (i,j) at bit (j-1)(j-2)/2 + (i-1); restricting to a front face keeps the
// low bits.
class EM2Model final : public SimplicialModel {
 public:
  static constexpr int kMaxTrunc = 7;

  explicit EM2Model(int trunc);

  int truncation() const override { return trunc_; }
  std::int64_t count(int k) const override { return static_cast<std::int64_t>(codes_[k].size()); }
  Simplex restrict(int k, std::int64_t idx, std::span<const int> vertices) const override;
  std::string name() const override { return "K(Z2,2)"; }
  std::string describe(int k, std::int64_t idx) const override;

  std::uint32_t code(int k, std::int64_t idx) const { return codes_[k][idx]; }
  // value of the cocycle on the triple i < j < l of a k-simplex
  static int triple(std::uint32_t code, int i, int j, int l);
  static int pair_bit(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }
  static bool degenerate_at(std::uint32_t code, int k, int p);
  std::int64_t lookup(int k, std::uint32_t code) const { return index_[k][code]; }

 private:
  int trunc_;
  std::vector<std::vector<std::uint32_t>> codes_;
  std::vector<std::vector<std::int32_t>> index_;  // code -> index or -1
};

struct EMSpace {
  SimplicialComplexTrunc underlying;
  int level = 1;
  Cochain fundamental;  // degree = level, Z/2
};

// level 1: nerve of B(Z/2); level 2: the cocycle model above.
EMSpace em(int level, int n);

struct ProductBase {
  SimplicialComplexTrunc complex;
  Cochain t;  // pulled back fundamental class
  std::shared_ptr<const SimplicialMap> to_group, to_em;
};
// nerve(BG) x K(Z2,2), truncated at n
ProductBase product_base(const FiniteGroup& g, int n);

struct SteenrodBasisReport {
  bool ok = true;
  int failed_degree = -1;
  std::string message;
  std::vector<int> expected, computed;  // per degree 0..n
  // per degree: monomial names and their coordinates in the computed basis
  std::vector<std::vector<std::string>> monomials;
  std::vector<std::vector<std::vector<std::int64_t>>> coordinates;
};

// Admissible monomials in t, Sq^1 t, Sq^2 Sq^1 t against H^k(K(Z2,2); Z2).
SteenrodBasisReport verify_steenrod_basis(const EMSpace& e, int n);

// Betti table of em(level, n) for the CLI: Z2 dimensions and Q/Z groups.
struct EMBetti {
  std::vector<std::int64_t> simplices;
  std::vector<int> z2_dims;
  std::vector<std::string> qz_groups;
};
EMBetti em_betti(int level, int n);

}  // namespace ordcalc
