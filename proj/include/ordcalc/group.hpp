#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordcalc {

// Finite group given by a full multiplication table on ids 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // trivial group

  // Validates associativity, unit and inverses; throws ValidationError.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {});
  // Closure of permutation generators on {0..m-1}; element 0 is the identity.
  static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens);
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int element_order(int a) const;
  bool is_central(int a) const;
  // Row-major multiplication table.
  std::vector<std::vector<int>> table() const;
  // Subgroup on the listed elements (must be closed); embedding[i] = element of *this.
  FiniteGroup subgroup(const std::vector<int>& elements) const;

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && mul_ == o.mul_; }

 private:
  int n_ = 1;
  int id_ = 0;
  std::vector<int> mul_{0};
  std::vector<int> inv_{0};
  std::vector<std::string> labels_{"e"};
};

// Homomorphism G -> Z2 marking the antiunitary elements.
struct TimeReversalTag {
  std::vector<std::uint8_t> orientation;
  void validate(const FiniteGroup& g) const;
  static TimeReversalTag trivial(const FiniteGroup& g);
};

// Left action table: act[g * points + x].
struct GSet {
  int points = 0;
  std::vector<int> act;
  int apply(int g, int x) const { return act[static_cast<std::size_t>(g) * points + x]; }
  void validate(const FiniteGroup& g) const;

  static GSet point(const FiniteGroup& g) { return fixed_points(g, 1); }
  static GSet fixed_points(const FiniteGroup& g, int n);
  static GSet regular(const FiniteGroup& g);
};

// Skeletal finite groupoid: one object per isomorphism class, with its
// automorphism group and the number of objects it stands for.
struct GroupoidComponent {
  FiniteGroup automorphisms;
  int objects = 1;
};

struct FiniteGroupoid {
  std::vector<GroupoidComponent> components;

  static FiniteGroupoid point() { return classifying(FiniteGroup::trivial()); }
  static FiniteGroupoid classifying(const FiniteGroup& g) { return {{{g, 1}}}; }
  static FiniteGroupoid discrete(int n);

  // General presentation: morphisms[f] = {src, tgt}; compose lists (f, g, h)
  // meaning "f then g" equals h; identities[x] is the unit morphism at x.
  static FiniteGroupoid from_presentation(int objects, const std::vector<std::pair<int, int>>& morphisms,
                                          const std::vector<int>& identities,
                                          const std::vector<std::vector<int>>& compose);
  int component_count() const { return static_cast<int>(components.size()); }
  bool connected() const { return components.size() == 1; }
};

// Action groupoid X//G in skeletal form, remembering how stabilisers sit in G.
struct ActionGroupoid {
  FiniteGroupoid groupoid;
  std::vector<int> representatives;              // orbit representative per component
  std::vector<std::vector<int>> stabilizer_embedding;  // component element -> element of G
  std::vector<std::vector<int>> orbits;
};
ActionGroupoid action_groupoid(const GSet& x, const FiniteGroup& g);

struct SuperGroup {
  FiniteGroup group;
  int eps = 0;
};

struct SupergroupReport {
  FiniteGroup quotient;
  std::vector<int> projection;  // G -> Q
  std::vector<int> section;     // Q -> G, section[identity] = identity
  // Normalised extension cocycle e(a, b) in Z2, row-major over Q x Q; empty when eps = id.
  std::vector<std::uint8_t> extension;
  bool eps_trivial = true;
  int extension_at(int a, int b) const {
    return extension.empty() ? 0 : extension[static_cast<std::size_t>(a) * quotient.order() + b];
  }
};

// Throws ValidationError naming the witness element when eps is not central or eps^2 != id.
SupergroupReport validate_supergroup(const SuperGroup& sg);

}  // namespace ordcalc
