#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ordcalc {

// Q ("over R") or Q(i) ("over C").  Elements of both are stored as Gaussian
// rationals; over Q the imaginary part stays zero.
enum class FieldKind { Q, QI };
std::string field_name(FieldKind k);

struct QI {
  mpq_class re, im;

  QI() = default;
  QI(long v) : re(v), im(0) {}
  QI(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  static QI i() { return QI(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  QI conj() const { return QI(re, -im); }
  mpq_class norm() const { return re * re + im * im; }
  QI inverse() const;

  QI& operator+=(const QI& o);
  QI& operator-=(const QI& o);
  QI& operator*=(const QI& o);
  QI& operator/=(const QI& o) { return *this *= o.inverse(); }
  bool operator==(const QI& o) const { return re == o.re && im == o.im; }
  bool operator!=(const QI& o) const { return !(*this == o); }
  // lexicographic on (re, im); only for deterministic ordering
  bool operator<(const QI& o) const { return re != o.re ? re < o.re : im < o.im; }
};

QI operator+(QI a, const QI& b);
QI operator-(QI a, const QI& b);
QI operator-(const QI& a);
QI operator*(QI a, const QI& b);
QI operator/(QI a, const QI& b);

// "p/q" or "p/q+r/s*i"; parse accepts the same and plain "i", "-i", "3*i".
std::string to_string(const QI& x);
QI parse_qi(const std::string& s);

using QIVector = std::vector<QI>;
using QIMatrix = std::vector<QIVector>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QIMatrix& m);
int rank(QIMatrix m);
// Basis of {x : m x = 0} for a matrix with `cols` columns.
std::vector<QIVector> nullspace(QIMatrix m, int cols);
QIMatrix identity_matrix(int n);
QIMatrix matmul(const QIMatrix& a, const QIMatrix& b);
QIMatrix conj(const QIMatrix& a);
std::optional<QIMatrix> inverse(const QIMatrix& a);
bool is_scalar_matrix(const QIMatrix& a, QI* scalar = nullptr);
std::string render(const QIMatrix& a);

// Signature (positive, negative, zero) of a symmetric rational matrix by
// congruence diagonalisation.
struct Inertia {
  int positive = 0, negative = 0, zero = 0;
  int signature() const { return positive - negative; }
};
Inertia inertia(const QIMatrix& symmetric);

// Gaussian-rational roots of a polynomial (coefficients low to high), with
// multiplicity removed; `rest` receives the part without roots in Q(i).
std::vector<QI> gaussian_roots(const QIVector& poly, QIVector* rest = nullptr);
std::string render_poly(const QIVector& poly, const std::string& var = "x");

}  // namespace ordcalc
