#include "ordcalc/abgroup.hpp"

#include <algorithm>
#include <map>

#include "ordcalc/error.hpp"

namespace ordcalc {

std::string Symbol::render() const {
  std::string s = name;
  for (auto [op, m] : ops) s += op == '[' ? "[" + std::to_string(m) + "]" : "/" + std::to_string(m);
  return s;
}

AbGroupExpr AbGroupExpr::free(int rank) {
  AbGroupExpr g;
  g.rank_ = rank;
  return g;
}

AbGroupExpr AbGroupExpr::cyclic(std::int64_t order) { return from_cyclic_orders({order}); }

AbGroupExpr AbGroupExpr::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
  AbGroupExpr g;
  for (std::int64_t o : orders) {
    if (o == 0)
      ++g.rank_;
    else if (o > 1)
      g.torsion_.push_back(o);
  }
  g.canonicalize();
  return g;
}

AbGroupExpr AbGroupExpr::symbol(Symbol s) {
  AbGroupExpr g;
  g.symbols_.push_back(std::move(s));
  return g;
}

AbGroupExpr AbGroupExpr::operator+(const AbGroupExpr& o) const {
  AbGroupExpr g = *this;
  g.rank_ += o.rank_;
  g.torsion_.insert(g.torsion_.end(), o.torsion_.begin(), o.torsion_.end());
  g.symbols_.insert(g.symbols_.end(), o.symbols_.begin(), o.symbols_.end());
  g.canonicalize();
  return g;
}

std::vector<std::int64_t> AbGroupExpr::elementary_divisors() const {
  std::vector<std::int64_t> out;
  for (std::int64_t d : torsion_) {
    std::int64_t n = d;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      std::int64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      out.push_back(q);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void AbGroupExpr::canonicalize() {
  // invariant factors from prime powers
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (std::int64_t q : elementary_divisors()) {
    std::int64_t p = 2;
    while (q % p) ++p;
    by_prime[p].push_back(q);
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> inv(len, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) inv[len - 1 - i] = checked_mul(inv[len - 1 - i], v[i]);
  torsion_ = inv;
  std::sort(symbols_.begin(), symbols_.end());
}

std::optional<std::int64_t> AbGroupExpr::order() const {
  if (!is_finite()) return std::nullopt;
  std::int64_t o = 1;
  for (std::int64_t d : torsion_) o = checked_mul(o, d);
  return o;
}

std::string AbGroupExpr::pretty() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  for (int i = 0; i < rank_; ++i) parts.push_back("Z");
  for (std::int64_t d : torsion_) parts.push_back("Z/" + std::to_string(d));
  for (const auto& s : symbols_) parts.push_back(s.render());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string AbGroupExpr::cell() const {
  if (is_zero()) return "0";
  std::vector<std::pair<std::string, int>> parts;
  auto push = [&](const std::string& s) {
    if (!parts.empty() && parts.back().first == s)
      ++parts.back().second;
    else
      parts.push_back({s, 1});
  };
  for (int i = 0; i < rank_; ++i) push("Z");
  for (std::int64_t d : torsion_) push("Z" + std::to_string(d));
  for (const auto& s : symbols_) push(s.render());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += i ? "+" : "";
    out += parts[i].first;
    if (parts[i].second > 1) out += "^" + std::to_string(parts[i].second);
  }
  return out;
}

}  // namespace ordcalc
