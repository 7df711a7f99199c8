#include "ordcalc/error.hpp"

#include <cstdlib>
#include <numeric>

namespace ordcalc {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in multiplication");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

int truncation_cap() {
  const char* v = std::getenv("ORDCALC_TRUNC_MAX");
  if (!v || !*v) return -1;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (end == v || x < 0) return -1;
  return static_cast<int>(x);
}

void check_truncation_cap(int n) {
  int cap = truncation_cap();
  if (cap >= 0 && n > cap)
    throw TruncationError("truncation " + std::to_string(n) + " exceeds ORDCALC_TRUNC_MAX=" +
                              std::to_string(cap),
                          n);
}

}  // namespace ordcalc
