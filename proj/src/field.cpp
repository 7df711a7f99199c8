#include "ordcalc/field.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ordcalc/error.hpp"

namespace ordcalc {

std::string field_name(FieldKind k) { return k == FieldKind::Q ? "Q" : "Q(i)"; }

QI QI::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  mpq_class n = norm();
  return QI(re / n, -im / n);
}

QI& QI::operator+=(const QI& o) {
  re += o.re;
  im += o.im;
  return *this;
}
QI& QI::operator-=(const QI& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
QI& QI::operator*=(const QI& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

QI operator+(QI a, const QI& b) { return a += b; }
QI operator-(QI a, const QI& b) { return a -= b; }
QI operator-(const QI& a) { return QI(-a.re, -a.im); }
QI operator*(QI a, const QI& b) { return a *= b; }
QI operator/(QI a, const QI& b) { return a /= b; }

std::string to_string(const QI& x) {
  if (x.is_real()) return x.re.get_str();
  std::string s = sgn(x.re) != 0 ? x.re.get_str() : "";
  if (!s.empty() && sgn(x.im) > 0) s += "+";
  return s + x.im.get_str() + "*i";
}

namespace {

mpq_class parse_rational(std::string s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

QI parse_qi(const std::string& in) {
  std::string s;
  for (char c : in)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ValidationError("empty scalar");
  if (s.back() != 'i') return QI(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return QI(0, parse_rational(s));
  return QI(parse_rational(s.substr(0, cut)), parse_rational(s.substr(cut)));
}

std::vector<int> rref(QIMatrix& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    QI inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      QI f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(QIMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<QIVector> nullspace(QIMatrix m, int cols) {
  std::vector<int> piv = rref(m);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<QIVector> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QIVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

QIMatrix identity_matrix(int n) {
  QIMatrix m(n, QIVector(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QIMatrix matmul(const QIMatrix& a, const QIMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QIMatrix c(n, QIVector(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

QIMatrix conj(const QIMatrix& a) {
  QIMatrix c = a;
  for (auto& row : c)
    for (auto& x : row) x = x.conj();
  return c;
}

std::optional<QIMatrix> inverse(const QIMatrix& a) {
  const int n = static_cast<int>(a.size());
  QIMatrix aug(n, QIVector(2 * n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw ValidationError("inverse of a non-square matrix");
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  QIMatrix inv(n, QIVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

bool is_scalar_matrix(const QIMatrix& a, QI* scalar) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !a[i][j].is_zero()) return false;
      if (i == j && a[i][i] != a[0][0]) return false;
    }
  if (scalar && n) *scalar = a[0][0];
  return true;
}

std::string render(const QIMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? ", " : "") << to_string(a[i][j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

Inertia inertia(const QIMatrix& sym) {
  const int n = static_cast<int>(sym.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!sym[i][j].is_real()) throw ValidationError("inertia needs a rational matrix");
      a[i][j] = sym[i][j].re;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) throw ValidationError("inertia needs a symmetric matrix");
  Inertia out;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n && p < 0; ++i)
      if (!done[i] && sgn(a[i][i]) != 0) p = i;
    if (p < 0) {
      // all remaining diagonal entries vanish; use an off-diagonal pair
      int r = -1, s = -1;
      for (int i = 0; i < n && r < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && sgn(a[i][j]) != 0) {
            r = i;
            s = j;
            break;
          }
      if (r < 0) break;
      // e_r <- e_r + e_s makes the diagonal entry 2 a_rs
      for (int k = 0; k < n; ++k) a[r][k] += a[s][k];
      for (int k = 0; k < n; ++k) a[k][r] += a[k][s];
      p = r;
    }
    done[p] = 1;
    const mpq_class d = a[p][p];
    (sgn(d) > 0 ? out.positive : out.negative)++;
    for (int i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][p]) == 0) continue;
      mpq_class f = a[i][p] / d;
      for (int k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (int k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

namespace {

QIVector trim(QIVector p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

QI evaluate(const QIVector& p, const QI& x) {
  QI acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// p / (x - r), assuming r is a root
QIVector deflate(const QIVector& p, const QI& r) {
  QIVector q(p.size() - 1);
  QI carry;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = p[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

struct GaussInt {
  mpz_class a, b;
};

// all Gaussian integers d (up to nothing: every associate is listed) dividing z
std::vector<GaussInt> gaussian_divisors(const GaussInt& z) {
  mpz_class n = z.a * z.a + z.b * z.b;
  if (n > mpz_class("1000000000000")) throw UnsupportedInput("polynomial coefficients too large for root search");
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  std::vector<GaussInt> out;
  for (const auto& m : divs) {
    for (mpz_class u = 0; u * u <= m; ++u) {
      mpz_class rest = m - u * u;
      mpz_class v = sqrt(rest);
      if (v * v != rest) continue;
      for (int su : {1, -1})
        for (int sv : {1, -1}) {
          GaussInt d{u * su, v * sv};
          if ((su < 0 && u == 0) || (sv < 0 && v == 0)) continue;
          // z / d = z * conj(d) / m
          mpz_class re = z.a * d.a + z.b * d.b, im = z.b * d.a - z.a * d.b;
          if (re % m == 0 && im % m == 0) out.push_back(d);
        }
    }
  }
  return out;
}

}  // namespace

std::vector<QI> gaussian_roots(const QIVector& poly_in, QIVector* rest) {
  QIVector p = trim(poly_in);
  std::vector<QI> roots;
  if (p.empty()) throw ValidationError("roots of the zero polynomial");
  // x = 0
  if (p.size() > 1 && p[0].is_zero()) {
    roots.push_back(QI(0));
    while (p.size() > 1 && p[0].is_zero()) p.erase(p.begin());
  }
  while (p.size() > 1) {
    mpz_class den = 1;
    for (const auto& c : p) {
      den = lcm(den, c.re.get_den());
      den = lcm(den, c.im.get_den());
    }
    auto to_int = [&](const QI& c) {
      return GaussInt{mpz_class(c.re * den), mpz_class(c.im * den)};
    };
    auto nums = gaussian_divisors(to_int(p.front()));
    auto dens = gaussian_divisors(to_int(p.back()));
    bool found = false;
    std::set<std::pair<mpq_class, mpq_class>> tried;
    for (const auto& u : nums) {
      for (const auto& v : dens) {
        QI r = QI(mpq_class(u.a), mpq_class(u.b)) / QI(mpq_class(v.a), mpq_class(v.b));
        if (!tried.insert({r.re, r.im}).second) continue;
        if (evaluate(p, r).is_zero()) {
          roots.push_back(r);
          while (p.size() > 1 && evaluate(p, r).is_zero()) p = deflate(p, r);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (rest) *rest = p;
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string render_poly(const QIVector& poly, const std::string& var) {
  std::string s;
  for (std::size_t k = poly.size(); k-- > 0;) {
    if (poly[k].is_zero()) continue;
    std::string c = to_string(poly[k]);
    if (!poly[k].is_real() && sgn(poly[k].re) != 0) c = "(" + c + ")";
    if (!s.empty()) s += (c[0] == '-' ? " - " : " + ");
    else if (c[0] == '-') s += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (k == 0) s += c;
    else {
      if (c != "1") s += c + "*";
      s += var + (k > 1 ? "^" + std::to_string(k) : "");
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace ordcalc
