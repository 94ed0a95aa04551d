// Exact arithmetic in the twelfth cyclotomic field.
//
// Elements are stored as c0 + c1*g + c2*g^2 + c3*g^3 where g is a primitive
// twelfth root of unity, so g^4 = g^2 - 1.  The field contains i = g^3, the
// primitive cube root of unity w = g^2 - 1, a primitive sixth root g^2, and
// sqrt(3) = 2g - g^3.  Square roots are decided exactly by descending through
// the tower Q < Q(sqrt 3) < Q(sqrt 3, i).
#pragma once

#include <array>
#include <optional>
#include <ostream>

#include "rational.hpp"

namespace fig8cv {

class Cyclo12 {
 public:
  Cyclo12() : c_{} {}
  Cyclo12(long n) : c_{} { c_[0] = n; }
  Cyclo12(const Rational& q) : c_{} { c_[0] = q; }
  Cyclo12(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo12 gen() { return Cyclo12(0, 1, 0, 0); }          // g
  static Cyclo12 imag_unit() { return Cyclo12(0, 0, 0, 1); }    // i
  static Cyclo12 omega() { return Cyclo12(-1, 0, 1, 0); }       // primitive cube root
  static Cyclo12 zeta6() { return Cyclo12(0, 0, 1, 0); }        // primitive sixth root
  static Cyclo12 sqrt3() { return Cyclo12(0, 2, 0, -1); }

  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  const Rational& rational_value() const {
    if (!is_rational()) throw arithmetic_error("element is not rational");
    return c_[0];
  }

  friend bool operator==(const Cyclo12& x, const Cyclo12& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Cyclo12& x, const Cyclo12& y) { return !(x == y); }

  Cyclo12 operator-() const { return Cyclo12(-c_[0], -c_[1], -c_[2], -c_[3]); }

  friend Cyclo12 operator+(const Cyclo12& x, const Cyclo12& y) {
    return Cyclo12(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]);
  }
  friend Cyclo12 operator-(const Cyclo12& x, const Cyclo12& y) {
    return Cyclo12(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]);
  }

  friend Cyclo12 operator*(const Cyclo12& x, const Cyclo12& y) {
    std::array<Rational, 7> p{};
    for (int a = 0; a < 4; ++a) {
      if (x.c_[static_cast<size_t>(a)] == 0) continue;
      for (int b = 0; b < 4; ++b)
        p[static_cast<size_t>(a + b)] += x.c_[static_cast<size_t>(a)] * y.c_[static_cast<size_t>(b)];
    }
    // Fold with g^4 = g^2 - 1, g^5 = g^3 - g, g^6 = -1.
    return Cyclo12(p[0] - p[4] - p[6], p[1] - p[5], p[2] + p[4], p[3] + p[5]);
  }

  Cyclo12& operator+=(const Cyclo12& y) { return *this = *this + y; }
  Cyclo12& operator-=(const Cyclo12& y) { return *this = *this - y; }
  Cyclo12& operator*=(const Cyclo12& y) { return *this = *this * y; }

  // Multiplicative inverse via the 4x4 multiplication matrix over Q.
  Cyclo12 inverse() const {
    if (is_zero()) throw arithmetic_error("division by zero in Q(zeta12)");
    if (is_rational()) return Cyclo12(Rational(1) / c_[0]);
    // Columns are the basis images c*g^k, written in the power basis.
    std::array<std::array<Rational, 5>, 4> m;
    Cyclo12 col = *this;
    for (int j = 0; j < 4; ++j) {
      for (int row = 0; row < 4; ++row) m[static_cast<size_t>(row)][static_cast<size_t>(j)] = col.c_[static_cast<size_t>(row)];
      col = col * gen();
    }
    m[0][4] = 1;
    m[1][4] = 0;
    m[2][4] = 0;
    m[3][4] = 0;
    for (int pc = 0; pc < 4; ++pc) {
      int pr = -1;
      for (int r = pc; r < 4; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(pc)] != 0) { pr = r; break; }
      if (pr < 0) throw arithmetic_error("singular multiplication matrix");
      std::swap(m[static_cast<size_t>(pc)], m[static_cast<size_t>(pr)]);
      const Rational piv = m[static_cast<size_t>(pc)][static_cast<size_t>(pc)];
      for (int k = pc; k <= 4; ++k) m[static_cast<size_t>(pc)][static_cast<size_t>(k)] /= piv;
      for (int r = 0; r < 4; ++r) {
        if (r == pc) continue;
        const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(pc)];
        if (f == 0) continue;
        for (int k = pc; k <= 4; ++k)
          m[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * m[static_cast<size_t>(pc)][static_cast<size_t>(k)];
      }
    }
    return Cyclo12(m[0][4], m[1][4], m[2][4], m[3][4]);
  }

  friend Cyclo12 operator/(const Cyclo12& x, const Cyclo12& y) { return x * y.inverse(); }

  // Complex conjugation, i.e. the automorphism g -> g^{-1} = g - g^3.
  Cyclo12 conj() const {
    return Cyclo12(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
  }

  // Coordinates in the display basis {1, i, w, w*i}:
  //   1 = 1, g = -w*i, g^2 = w + 1, g^3 = i.
  struct Display {
    Rational one, i, w, wi;
  };
  Display display() const {
    return Display{c_[0] + c_[2], c_[3], c_[2], -c_[1]};
  }
  static Cyclo12 from_display(const Rational& one, const Rational& i, const Rational& w,
                              const Rational& wi) {
    return Cyclo12(one - w, -wi, w, i);
  }

 private:
  std::array<Rational, 4> c_;
};

namespace detail {

// Elements of Q(sqrt 3), used only while deciding squareness.
struct QSqrt3 {
  Rational a, b;  // a + b*sqrt(3)
  bool is_zero() const { return a == 0 && b == 0; }
  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QSqrt3 operator-() const { return {-a, -b}; }
  friend QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y) {
    const Rational n = y.a * y.a - 3 * y.b * y.b;
    if (n == 0) throw arithmetic_error("division by zero in Q(sqrt3)");
    return {(x.a * y.a - 3 * x.b * y.b) / n, (x.b * y.a - x.a * y.b) / n};
  }
};

inline std::optional<QSqrt3> sqrt_in_qsqrt3(const QSqrt3& u) {
  if (u.is_zero()) return QSqrt3{0, 0};
  if (u.b == 0) {
    if (auto r = rational_sqrt(u.a)) return QSqrt3{*r, 0};
    if (auto r = rational_sqrt(u.a / 3)) return QSqrt3{0, *r};
    return std::nullopt;
  }
  // gamma = p + q*sqrt3 needs p^2, 3q^2 to be the roots of X^2 - a X + 3b^2/4.
  const auto disc = rational_sqrt(u.a * u.a - 3 * u.b * u.b);
  if (!disc) return std::nullopt;
  for (int sg = 0; sg < 2; ++sg) {
    const Rational cand = (u.a + (sg ? -*disc : *disc)) / 2;
    if (auto p = rational_sqrt(cand); p && *p != 0) {
      return QSqrt3{*p, u.b / (2 * *p)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Exact square root in Q(zeta12) when one exists.
inline std::optional<Cyclo12> cyclo_sqrt(const Cyclo12& c) {
  using detail::QSqrt3;
  if (c.is_zero()) return Cyclo12();
  const auto d = c.display();
  // c = u + v*i with u, v in Q(sqrt3): w = -1/2 + (sqrt3/2) i, w*i = -sqrt3/2 - i/2.
  const QSqrt3 u{d.one - d.w / 2, -d.wi / 2};
  const QSqrt3 v{d.i - d.wi / 2, d.w / 2};
  const auto back = [](const QSqrt3& x, const QSqrt3& y) {
    // gamma = x + y*i with x = u0 + u1 sqrt3, y = v0 + v1 sqrt3.
    const Rational awi = -2 * x.b, aw = 2 * y.b;
    const Rational r = x.a + y.b, ai = y.a - x.b;
    return Cyclo12::from_display(r, ai, aw, awi);
  };
  if (v.is_zero()) {
    if (auto x = detail::sqrt_in_qsqrt3(u)) return back(*x, QSqrt3{0, 0});
    if (auto y = detail::sqrt_in_qsqrt3(-u)) return back(QSqrt3{0, 0}, *y);
    return std::nullopt;
  }
  const auto norm_root = detail::sqrt_in_qsqrt3(u * u + v * v);
  if (!norm_root) return std::nullopt;
  for (int sg = 0; sg < 2; ++sg) {
    const QSqrt3 cand = (u + (sg ? -*norm_root : *norm_root)) * QSqrt3{Rational(1, 2), 0};
    if (auto x = detail::sqrt_in_qsqrt3(cand); x && !x->is_zero()) {
      const QSqrt3 y = v / (QSqrt3{2, 0} * *x);
      return back(*x, y);
    }
  }
  return std::nullopt;
}

inline bool cyclo_is_square(const Cyclo12& c) { return cyclo_sqrt(c).has_value(); }

}  // namespace fig8cv
