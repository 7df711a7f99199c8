#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/group.hpp"
#include "ordcalc/simplicial.hpp"
#include "ordcalc/smith.hpp"

namespace ordcalc {

// Coefficients: Z, Z/m, or Q/Z with denominators dividing M (values stored
// as numerators mod M).  The optional twist makes antiunitary elements act by
// negation; it needs edge labels on the simplicial model.
struct CoeffModule {
  enum class Kind { Int, IntMod, QmodZ };
  Kind kind = Kind::Int;
  std::int64_t modulus = 0;
  std::optional<TimeReversalTag> twist;

  static CoeffModule integers() { return {}; }
  static CoeffModule mod(std::int64_t m);
  static CoeffModule qmodz(std::int64_t bound);
  CoeffModule twisted(TimeReversalTag t) const {
    CoeffModule c = *this;
    c.twist = std::move(t);
    return c;
  }
  CoeffModule untwisted() const {
    CoeffModule c = *this;
    c.twist.reset();
    return c;
  }
  RingOps ring() const { return {kind == Kind::Int ? 0 : modulus}; }
  bool is_z2() const { return kind == Kind::IntMod && modulus == 2; }
  bool twist_nontrivial() const;
  std::string name() const;
  void validate() const;
};

struct Cochain {
  SimplicialComplexTrunc complex;
  int degree = 0;
  CoeffModule coeff;
  std::vector<std::int64_t> values;  // one per nondegenerate simplex

  static Cochain zero(const SimplicialComplexTrunc& cx, int k, const CoeffModule& c);
  std::int64_t value(const Simplex& s) const { return s.degenerate() ? 0 : values[s.index]; }
  bool is_zero() const;
  // numerator / denominator rendering, "p/q" for Q/Z and integers otherwise
  std::string render_value(std::int64_t v) const;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, std::int64_t c);
// Twisted when a.coeff.twist is set: the sign of face 0 follows the orientation
// character of the edge (0,1).
Cochain coboundary(const Cochain& a);
bool is_cocycle(const Cochain& a);
Cochain pullback(const Cochain& a, const SimplicialMap& f);
// Z/m -> Z/n or Q/Z by the natural map when it exists (m | n, or 1 -> M/m).
Cochain change_coefficients(const Cochain& a, const CoeffModule& target);

// Lazily built, cached per-degree data.
class ComplexCache {
 public:
  std::shared_ptr<const SparseIntMatrix> matrix(int k, const std::function<SparseIntMatrix()>& build);
  std::shared_ptr<const SmithForm> smith(int k, const std::function<SmithForm()>& build);

 private:
  std::mutex mu_;
  std::map<int, std::shared_ptr<const SparseIntMatrix>> matrices_;
  std::map<int, std::shared_ptr<const SmithForm>> smiths_;
};

// Abstract finite cochain complex over Z with cached coboundaries and their
// Smith forms.  Cochains of degree k are vectors of length dim(k).
class CochainComplex {
 public:
  virtual ~CochainComplex() = default;
  virtual int top() const = 0;  // cochains exist through this degree
  virtual std::int64_t dim(int k) const = 0;
  // delta_k : C^k -> C^{k+1}; requires k + 1 <= top()
  std::shared_ptr<const SparseIntMatrix> coboundary(int k) const;
  std::shared_ptr<const SmithForm> smith(int k) const;
  virtual std::string name() const = 0;

 protected:
  virtual SparseIntMatrix build_coboundary(int k) const = 0;
  virtual ComplexCache& cache() const = 0;
};

// Normalised cochains on a truncated simplicial set, optionally twisted and
// optionally relative to a subcomplex (cochains vanishing on it).
class SimplicialCochainComplex final : public CochainComplex {
 public:
  SimplicialCochainComplex(SimplicialComplexTrunc cx, std::optional<TimeReversalTag> twist,
                           std::shared_ptr<const SubcomplexMask> relative);

  int top() const override { return cx_.trunc(); }
  std::int64_t dim(int k) const override;
  std::string name() const override;

  const SimplicialComplexTrunc& simplicial() const { return cx_; }
  const std::optional<TimeReversalTag>& twist() const { return twist_; }
  bool relative() const { return static_cast<bool>(rel_); }
  // basis index <-> simplex index
  std::int64_t simplex_of(int k, std::int64_t b) const { return rel_ ? basis_[k][b] : b; }
  std::int64_t basis_of(int k, std::int64_t s) const { return rel_ ? position_[k][s] : s; }
  std::vector<std::int64_t> to_basis(const Cochain& c) const;
  Cochain from_basis(int k, const CoeffModule& coeff, const std::vector<std::int64_t>& v) const;
  // orientation bit of the edge (0,1) of a nondegenerate k-simplex
  int twist_bit(int k, std::int64_t idx) const;

 protected:
  SparseIntMatrix build_coboundary(int k) const override;
  ComplexCache& cache() const override { return *cache_; }

 private:
  SimplicialComplexTrunc cx_;
  std::optional<TimeReversalTag> twist_;
  std::shared_ptr<const SubcomplexMask> rel_;
  std::vector<std::vector<std::int64_t>> basis_, position_;
  std::shared_ptr<ComplexCache> cache_;
};

// Shared complex for (cx, twist, relative); cached on the model.
std::shared_ptr<const SimplicialCochainComplex> cochain_complex(const SimplicialComplexTrunc& cx,
                                                                const std::optional<TimeReversalTag>& twist,
                                                                std::shared_ptr<const SubcomplexMask> relative = {});

// D^k = C^{k+1}(Y) + C^k(X), d(a, b) = (-da, f^*a + db), for f : X -> Y.
class ConeComplex final : public CochainComplex {
 public:
  ConeComplex(std::shared_ptr<const SimplicialCochainComplex> y, std::shared_ptr<const SimplicialCochainComplex> x,
              std::shared_ptr<const SimplicialMap> f);

  int top() const override { return std::min(y_->top() - 1, x_->top()); }
  std::int64_t dim(int k) const override { return y_->dim(k + 1) + x_->dim(k); }
  std::string name() const override { return "cone(" + x_->name() + " -> " + y_->name() + ")"; }

  const SimplicialCochainComplex& base() const { return *y_; }
  const SimplicialCochainComplex& source() const { return *x_; }
  std::pair<Cochain, Cochain> split(int k, const CoeffModule& coeff, const std::vector<std::int64_t>& v) const;

 protected:
  SparseIntMatrix build_coboundary(int k) const override;
  ComplexCache& cache() const override { return *cache_; }

 private:
  std::shared_ptr<const SimplicialCochainComplex> y_, x_;
  std::shared_ptr<const SimplicialMap> f_;
  std::shared_ptr<ComplexCache> cache_;
};

}  // namespace ordcalc
