#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordcalc {

// Formal summand such as sW, sW[2] (2-torsion) or sW/2 (quotient), or the
// divisible group C^x.  Operators apply left to right.
struct Symbol {
  std::string name;
  std::vector<std::pair<char, std::int64_t>> ops;  // ('[', m) torsion, ('/', m) quotient

  std::string render() const;
  bool operator==(const Symbol&) const = default;
  bool operator<(const Symbol& o) const { return render() < o.render(); }
};

inline constexpr const char* kCstar = "C^×";

// Finitely generated abelian group rank + divisor chain, plus formal symbols.
class AbGroupExpr {
 public:
  AbGroupExpr() = default;

  static AbGroupExpr zero() { return {}; }
  static AbGroupExpr free(int rank);
  static AbGroupExpr cyclic(std::int64_t order);  // order 0 means Z
  // Orders of cyclic summands: 0 = Z, 1 = trivial.
  static AbGroupExpr from_cyclic_orders(const std::vector<std::int64_t>& orders);
  static AbGroupExpr symbol(Symbol s);
  static AbGroupExpr cstar() { return symbol({kCstar, {}}); }

  AbGroupExpr operator+(const AbGroupExpr& o) const;
  bool operator==(const AbGroupExpr& o) const = default;

  int rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty() && symbols_.empty(); }
  bool is_finite() const { return rank_ == 0 && symbols_.empty(); }
  // |G| when finite and free of symbols.
  std::optional<std::int64_t> order() const;
  // prime-power cyclic decomposition of the torsion part
  std::vector<std::int64_t> elementary_divisors() const;

  // "Z/2 + Z/4 + sW[2]" style
  std::string pretty() const;
  // table cell style: "Z2", "Z2^2", "Z4", "C^x", "sW[2]", "0"
  std::string cell() const;

 private:
  void canonicalize();
  int rank_ = 0;
  std::vector<std::int64_t> torsion_;
  std::vector<Symbol> symbols_;
};

}  // namespace ordcalc
