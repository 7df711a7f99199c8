#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/field.hpp"
#include "ordcalc/group.hpp"

namespace ordcalc {

// Finite-dimensional superalgebra by structure constants: b_i b_j = sum_k c_ij^k b_k.
// Products are stored sparsely per (i, j).
class SuperAlgebra {
 public:
  using Term = std::pair<int, QI>;

  SuperAlgebra() = default;
  SuperAlgebra(FieldKind field, std::vector<int> parity, QIVector unit);

  FieldKind field() const { return field_; }
  int dim() const { return static_cast<int>(parity_.size()); }
  int parity(int i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const QIVector& unit() const { return unit_; }
  // index of the unit when it is a basis vector, else -1
  int unit_index() const;
  bool graded() const;
  std::string name;

  void set_product(int i, int j, std::vector<Term> terms);
  void add_term(int i, int j, int k, const QI& v);
  const std::vector<Term>& product(int i, int j) const { return c_[static_cast<std::size_t>(i) * dim() + j]; }

  QIVector mul(const QIVector& a, const QIVector& b) const;
  QIVector basis(int i) const;
  // left multiplication matrix (column j = b_i b_j in coordinates)
  QIMatrix left(const QIVector& a) const;

  // associativity, unit and parity checks; throws ValidationError naming the witness
  void validate() const;

 private:
  FieldKind field_ = FieldKind::QI;
  std::vector<int> parity_;
  QIVector unit_;
  std::vector<std::vector<Term>> c_;
};

// Constructors.
SuperAlgebra base_field(FieldKind f);
SuperAlgebra matrix_algebra(int k, FieldKind f);
SuperAlgebra quaternions();  // over Q
SuperAlgebra clifford(int n, FieldKind f = FieldKind::QI);  // odd generators, x^2 = -1
SuperAlgebra tensor(const SuperAlgebra& a, const SuperAlgebra& b);  // graded (Koszul signs)
SuperAlgebra mat(const SuperAlgebra& a, int p, int q);              // Mat_{p|q}(a)
SuperAlgebra opposite(const SuperAlgebra& a);                       // graded opposite
SuperAlgebra group_algebra(const FiniteGroup& g, FieldKind f);
// f[x]/(poly), poly monic, coefficients low to high
SuperAlgebra polynomial_quotient(const QIVector& poly, FieldKind f);
// the same structure constants read over Q(i)
SuperAlgebra complexify(const SuperAlgebra& a);
SuperAlgebra ungraded(const SuperAlgebra& a);

// Subspace as a basis of coordinate vectors.
struct Subspace {
  std::vector<QIVector> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// (Super)centre: homogeneous x with x b = (-1)^{|x||b|} b x for all b.
// With graded = false the ordinary centre is computed.
Subspace centre(const SuperAlgebra& a, bool graded = true);
SuperAlgebra subalgebra(const SuperAlgebra& a, const Subspace& s);

struct SeparabilityReport {
  bool separable = false;
  Subspace radical;  // kernel of the trace form
};
SeparabilityReport is_separable(const SuperAlgebra& a);

enum class BrauerKind { R, H, Even, Odd, Trivial };
struct BrauerClass {
  std::string base;  // "R" or "C"
  BrauerKind kind = BrauerKind::Trivial;
  bool fermionic = false;
  std::string name() const;
  bool operator==(const BrauerClass& o) const { return base == o.base && kind == o.kind; }
};
BrauerClass operator*(const BrauerClass& a, const BrauerClass& b);
BrauerClass inverse(const BrauerClass& a);

// Signature table of the trace form x -> tr(L_x L_x), generated from
// Mat_k(Q) and Mat_k(H), k <= 4.
struct CalibrationEntry {
  int dim = 0;
  int signature = 0;
  BrauerKind kind = BrauerKind::R;
  std::string source;
};
const std::vector<CalibrationEntry>& brauer_calibration();

// Central simple algebra over Q read as an R-algebra (grading ignored).
BrauerClass brauer_class_R(const SuperAlgebra& a);
// Central simple superalgebra over Q(i).
BrauerClass super_brauer_class_C(const SuperAlgebra& a);

// Fixed algebra of a -> f conj(a) f^{-1} on Mat_k(Q(i)).
struct RealFormResult {
  SuperAlgebra algebra;  // over Q
  BrauerClass cls;
  QI square;             // f conj(f) = square * id
};
RealFormResult real_form(int k, const QIMatrix& f);

// Characters of a commutative split separable algebra, as primitive idempotents.
struct LinearMap {
  QIMatrix matrix;          // column j = image of b_j
  bool antilinear = false;  // conjugate the input coordinates first
  QIVector apply(const QIVector& v) const;
};
struct SpectrumResult {
  std::vector<QIVector> idempotents;  // over Q(i)
  std::vector<std::vector<int>> permutations;  // one per supplied map
  int points() const { return static_cast<int>(idempotents.size()); }
};
SpectrumResult spec_commutative(const SuperAlgebra& a, const std::vector<LinearMap>& maps = {});

// Complex conjugation on Q(i) as a Q-algebra: {1, j}, j^2 = -1, j -> -j.
std::pair<SuperAlgebra, LinearMap> complex_numbers_over_r();

}  // namespace ordcalc
