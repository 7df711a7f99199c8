#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordcalc {

// Bad input data: tables that are not groups, actions that are not actions, ...
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Not enough simplices stored to answer the question.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int needed)
      : std::runtime_error(what), needed_(needed) {}
  int needed() const { return needed_; }

 private:
  int needed_;
};

// A Q/Z computation met an invariant factor that does not divide the bound M.
class ModulusEscalation : public std::runtime_error {
 public:
  ModulusEscalation(const std::string& what, std::int64_t suggested)
      : std::runtime_error(what), suggested_(suggested) {}
  std::int64_t suggested() const { return suggested_; }

 private:
  std::int64_t suggested_;
};

// Input outside the supported family (e.g. non-split idempotents).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Spectrum or rule configuration that cannot be evaluated.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
// floor-style residue in [0, m)
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Caps simplex enumeration (truncation degree); read from ORDCALC_TRUNC_MAX.
int truncation_cap();
void check_truncation_cap(int n);

}  // namespace ordcalc
