#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordcalc/group.hpp"

namespace ordcalc {

// A k-simplex in Eilenberg-Zilber form: a nondegenerate simplex of dimension
// dim - popcount(collapsed) with a degeneracy applied to it.  Bit j of
// `collapsed` says vertices j and j+1 of the k-simplex are identified.
struct Simplex {
  int dim = 0;
  std::int64_t index = -1;
  std::uint32_t collapsed = 0;

  int base_dim() const { return dim - __builtin_popcount(collapsed); }
  bool degenerate() const { return collapsed != 0; }
  bool operator==(const Simplex&) const = default;
};

// Degreewise finite simplicial set, stored through its nondegenerate simplices.
class SimplicialModel {
 public:
  virtual ~SimplicialModel() = default;
  virtual int truncation() const = 0;
  virtual std::int64_t count(int k) const = 0;
  // Restriction of the nondegenerate simplex (k, idx) to a strictly increasing
  // nonempty vertex list in [0, k].
  virtual Simplex restrict(int k, std::int64_t idx, std::span<const int> vertices) const = 0;
  virtual std::string name() const = 0;
  virtual std::string describe(int k, std::int64_t idx) const;
  // Group element carried by a nondegenerate 1-simplex (labelled nerves only);
  // kUnlabelled if none, kIdentityEdge if the edge carries the unit.
  static constexpr int kUnlabelled = -1;
  static constexpr int kIdentityEdge = -2;
  virtual int edge_label(std::int64_t /*idx*/) const { return kUnlabelled; }

  Simplex face(int k, std::int64_t idx, int j) const;

  // Memo slot for derived data (coboundary matrices, Smith forms).  The
  // builder runs outside the lock; the first stored value wins.
  std::shared_ptr<void> memo(const std::string& key, const std::function<std::shared_ptr<void>()>& make) const;

 private:
  mutable std::mutex memo_mutex_;
  mutable std::map<std::string, std::shared_ptr<void>> memo_;
};

// Restriction of an arbitrary (possibly degenerate) simplex.
Simplex restrict_simplex(const SimplicialModel& m, const Simplex& s, std::span<const int> vertices);

class SimplicialComplexTrunc {
 public:
  SimplicialComplexTrunc() = default;
  explicit SimplicialComplexTrunc(std::shared_ptr<const SimplicialModel> m) : model_(std::move(m)) {}

  int trunc() const { return model_->truncation(); }
  std::int64_t count(int k) const { return k < 0 || k > trunc() ? 0 : model_->count(k); }
  Simplex face(int k, std::int64_t idx, int j) const { return model_->face(k, idx, j); }
  const SimplicialModel& model() const { return *model_; }
  const std::shared_ptr<const SimplicialModel>& shared() const { return model_; }
  bool same(const SimplicialComplexTrunc& o) const { return model_ == o.model_; }
  std::string name() const { return model_->name(); }

  // Exhaustive check of d_i d_j = d_{j-1} d_i; returns a description of the
  // first failure or nullopt.
  std::optional<std::string> check_simplicial_identities() const;

 private:
  std::shared_ptr<const SimplicialModel> model_;
};

class SimplicialMap {
 public:
  virtual ~SimplicialMap() = default;
  virtual Simplex image(int k, std::int64_t idx) const = 0;
  virtual const SimplicialComplexTrunc& source() const = 0;
  virtual const SimplicialComplexTrunc& target() const = 0;
};

// Small category with finitely many morphisms; composition "f then g".
struct FiniteCategory {
  int objects = 0;
  std::vector<int> src, tgt;
  std::vector<int> identity;          // per object
  std::vector<int> compose;           // [f * m + g] -> morphism or -1
  std::vector<int> label;             // optional group element per morphism
  std::vector<std::string> names;     // optional, for describe()

  int morphisms() const { return static_cast<int>(src.size()); }
  int then(int f, int g) const { return compose[static_cast<std::size_t>(f) * morphisms() + g]; }
  bool is_identity(int f) const { return identity[src[f]] == f; }

  static FiniteCategory from_group(const FiniteGroup& g);
  // Skeletal groupoid; labels are the element ids inside each component group.
  static FiniteCategory from_groupoid(const FiniteGroupoid& gpd);
  // Mapping cylinder of a functor F: x -> y.  Objects of x come first, then y;
  // extra morphisms (a, h): a -> tgt(h) for each object a of x and each h out of F(a).
  // The morphisms of x keep their ids, so x embeds as a full subcategory.
  static FiniteCategory cylinder(const FiniteCategory& x, const FiniteCategory& y,
                                 const std::vector<int>& functor_objects,
                                 const std::vector<int>& functor_morphisms);
};

class NerveModel final : public SimplicialModel {
 public:
  NerveModel(FiniteCategory cat, int trunc, std::string name);

  int truncation() const override { return trunc_; }
  std::int64_t count(int k) const override;
  Simplex restrict(int k, std::int64_t idx, std::span<const int> vertices) const override;
  std::string name() const override { return name_; }
  std::string describe(int k, std::int64_t idx) const override;
  int edge_label(std::int64_t idx) const override;

  const FiniteCategory& category() const { return cat_; }
  // morphism chain of a nondegenerate k-simplex (k >= 1)
  std::span<const int> chain(int k, std::int64_t idx) const {
    return {chains_[k].data() + idx * k, static_cast<std::size_t>(k)};
  }
  int vertex_object(int k, std::int64_t idx, int v) const;
  // index of a chain of non-identity morphisms, or -1
  std::int64_t lookup(std::span<const int> chain) const;
  // object id for 0-simplices
  std::int64_t object_simplex(int obj) const { return obj; }

 private:
  std::uint64_t key(std::span<const int> chain) const;

  FiniteCategory cat_;
  int trunc_;
  std::string name_;
  std::vector<std::vector<int>> chains_;
  std::vector<std::unordered_map<std::uint64_t, std::int64_t>> index_;
};

// Levelwise product of two simplicial sets.
class ProductModel final : public SimplicialModel {
 public:
  ProductModel(SimplicialComplexTrunc a, SimplicialComplexTrunc b, int trunc);

  int truncation() const override { return trunc_; }
  std::int64_t count(int k) const override { return static_cast<std::int64_t>(simplices_[k].size()); }
  Simplex restrict(int k, std::int64_t idx, std::span<const int> vertices) const override;
  std::string name() const override { return a_.name() + " x " + b_.name(); }
  std::string describe(int k, std::int64_t idx) const override;
  // labels come from the first factor
  int edge_label(std::int64_t idx) const override;

  std::pair<Simplex, Simplex> components(int k, std::int64_t idx) const { return simplices_[k][idx]; }
  const SimplicialComplexTrunc& first() const { return a_; }
  const SimplicialComplexTrunc& second() const { return b_; }
  std::int64_t lookup(int k, const Simplex& a, const Simplex& b) const;

 private:
  struct Key {
    std::int64_t ia, ib;
    std::uint32_t ma, mb;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = static_cast<std::uint64_t>(k.ia) * 0x9E3779B97F4A7C15ull;
      h ^= static_cast<std::uint64_t>(k.ib) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
      h ^= (static_cast<std::uint64_t>(k.ma) << 32 | k.mb) * 0xC2B2AE3D27D4EB4Full;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  SimplicialComplexTrunc a_, b_;
  int trunc_;
  std::vector<std::vector<std::pair<Simplex, Simplex>>> simplices_;
  std::vector<std::unordered_map<Key, std::int64_t, KeyHash>> index_;
};

// Map of nerves induced by a functor (given on morphisms).
class NerveFunctorMap final : public SimplicialMap {
 public:
  NerveFunctorMap(SimplicialComplexTrunc source, SimplicialComplexTrunc target, std::vector<int> on_objects,
                  std::vector<int> on_morphisms);
  Simplex image(int k, std::int64_t idx) const override;
  const SimplicialComplexTrunc& source() const override { return src_; }
  const SimplicialComplexTrunc& target() const override { return tgt_; }

 private:
  SimplicialComplexTrunc src_, tgt_;
  const NerveModel* s_;
  const NerveModel* t_;
  std::vector<int> obj_, mor_;
};

class ProjectionMap final : public SimplicialMap {
 public:
  ProjectionMap(SimplicialComplexTrunc product, int which);
  Simplex image(int k, std::int64_t idx) const override;
  const SimplicialComplexTrunc& source() const override { return src_; }
  const SimplicialComplexTrunc& target() const override { return tgt_; }

 private:
  SimplicialComplexTrunc src_, tgt_;
  const ProductModel* p_;
  int which_;
};

SimplicialComplexTrunc nerve(const FiniteGroupoid& gpd, int n);
SimplicialComplexTrunc nerve(const FiniteGroup& g, int n);
SimplicialComplexTrunc borel(const GSet& x, const FiniteGroup& g, int n);

struct BorelData {
  ActionGroupoid groupoid;
  SimplicialComplexTrunc total;  // nerve of X//G, edges labelled by elements of G
  SimplicialComplexTrunc base;   // nerve of BG
  std::shared_ptr<const SimplicialMap> projection;
};
BorelData borel_with_projection(const GSet& x, const FiniteGroup& g, int n);

// Cylinder of the functor X//G -> BG (or of any skeletal groupoid to a point,
// via the trivial group).  `sub` lists, per degree, the nondegenerate simplices
// lying in the X end.
using SubcomplexMask = std::vector<std::vector<char>>;

struct CylinderData {
  SimplicialComplexTrunc cylinder;
  std::shared_ptr<const SubcomplexMask> in_source;
  SimplicialComplexTrunc target;   // the far end
  std::shared_ptr<const SimplicialMap> target_inclusion;
};
CylinderData borel_cylinder(const GSet& x, const FiniteGroup& g, int n);
CylinderData groupoid_cylinder(const FiniteGroupoid& gpd, int n);

}  // namespace ordcalc
