// Exact dense 2x2 and 3x3 linear algebra, generic over the scalar ring:
// FieldElem for numeric work, MPoly / RatFunc / SqrtPoly for symbolic work.
// Inverses go through the adjugate, and the intertwiner solver is a small
// division-free Gaussian elimination whose back-substitution divides only by
// pivots.

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fig8cv/mpoly.hpp"

namespace fig8cv {

namespace scalar {

template <class T>
T one();
template <>
inline FieldElem one<FieldElem>() { return FieldElem(1); }
template <>
inline MPoly one<MPoly>() { return MPoly(1L); }
template <>
inline RatFunc one<RatFunc>() { return RatFunc(MPoly(1L)); }
template <>
inline SqrtPoly one<SqrtPoly>() { return SqrtPoly::constant(FieldElem(1)); }

template <class T>
T inverse(const T& x);
template <>
inline FieldElem inverse<FieldElem>(const FieldElem& x) { return x.inverse(); }
template <>
inline RatFunc inverse<RatFunc>(const RatFunc& x) {
  if (x.is_zero()) throw poly_error("division by zero rational function");
  return RatFunc(x.den(), x.num());
}
template <>
inline SqrtPoly inverse<SqrtPoly>(const SqrtPoly& x) { return x.inverse(); }

}  // namespace scalar

template <class T>
class Mat2 {
 public:
  Mat2() = default;
  Mat2(T a, T b, T c, T d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity() {
    Mat2 m;
    m.at(0, 0) = scalar::one<T>();
    m.at(1, 1) = scalar::one<T>();
    return m;
  }

  T& at(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
  const T& at(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

  T trace() const { return e_[0] + e_[3]; }
  T det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  Mat2 inverse() const {
    const T d = scalar::inverse(det());
    return Mat2(e_[3] * d, -e_[1] * d, -e_[2] * d, e_[0] * d);
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        r.at(i, j) = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
      }
    }
    return r;
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.e_[static_cast<std::size_t>(k)] = x.e_[k] + y.e_[k];
    return r;
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.e_[static_cast<std::size_t>(k)] = x.e_[k] - y.e_[k];
    return r;
  }
  friend Mat2 operator*(const T& s, const Mat2& m) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.e_[static_cast<std::size_t>(k)] = s * m.e_[k];
    return r;
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    for (int k = 0; k < 4; ++k) {
      if ((x.e_[static_cast<std::size_t>(k)] - y.e_[static_cast<std::size_t>(k)]).is_zero() ==
          false) {
        return false;
      }
    }
    return true;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

 private:
  std::array<T, 4> e_{};
};

template <class T>
class Mat3 {
 public:
  Mat3() = default;
  Mat3(T m00, T m01, T m02, T m10, T m11, T m12, T m20, T m21, T m22)
      : e_{std::move(m00), std::move(m01), std::move(m02), std::move(m10), std::move(m11),
           std::move(m12), std::move(m20), std::move(m21), std::move(m22)} {}

  static Mat3 identity() {
    Mat3 m;
    for (int k = 0; k < 3; ++k) m.at(k, k) = scalar::one<T>();
    return m;
  }

  static Mat3 scalar_matrix(const T& s) {
    Mat3 m;
    for (int k = 0; k < 3; ++k) m.at(k, k) = s;
    return m;
  }

  T& at(int r, int c) { return e_[static_cast<std::size_t>(3 * r + c)]; }
  const T& at(int r, int c) const { return e_[static_cast<std::size_t>(3 * r + c)]; }

  T trace() const { return e_[0] + e_[4] + e_[8]; }

  T det() const {
    return e_[0] * (e_[4] * e_[8] - e_[5] * e_[7]) - e_[1] * (e_[3] * e_[8] - e_[5] * e_[6]) +
           e_[2] * (e_[3] * e_[7] - e_[4] * e_[6]);
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    }
    return r;
  }

  // Adjugate: M * adj(M) = det(M) * Id.
  Mat3 adj() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const int r1 = (i + 1) % 3, r2 = (i + 2) % 3;
        const int c1 = (j + 1) % 3, c2 = (j + 2) % 3;
        r.at(j, i) = at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
      }
    }
    return r;
  }

  Mat3 inverse() const { return scalar::inverse(det()) * adj(); }

  Mat3 pow(unsigned e) const {
    Mat3 r = identity();
    Mat3 base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        r.at(i, j) =
            x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j) + x.at(i, 2) * y.at(2, j);
      }
    }
    return r;
  }
  friend Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.e_[k] = x.e_[k] + y.e_[k];
    return r;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.e_[k] = x.e_[k] - y.e_[k];
    return r;
  }
  friend Mat3 operator*(const T& s, const Mat3& m) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.e_[k] = s * m.e_[k];
    return r;
  }

  bool is_zero() const {
    for (const T& x : e_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Mat3& x, const Mat3& y) { return (x - y).is_zero(); }
  friend bool operator!=(const Mat3& x, const Mat3& y) { return !(x == y); }

 private:
  std::array<T, 9> e_{};
};

// Ascending coefficients of det(t*Id - M) = t^3 - tr(M) t^2 + tr(adj M) t - det M.
template <class T>
std::array<T, 4> charpoly(const Mat3<T>& m) {
  return {T{} - m.det(), m.adj().trace(), T{} - m.trace(), scalar::one<T>()};
}

// The matrix plugged into its own characteristic polynomial; zero by
// Cayley-Hamilton, kept explicit so tests can assert it over any scalar ring.
template <class T>
Mat3<T> charpoly_at(const Mat3<T>& m) {
  const Mat3<T> m2 = m * m;
  return m2 * m - m.trace() * m2 + m.adj().trace() * m - Mat3<T>::scalar_matrix(m.det());
}

// Action of an SL2 element on symmetric 2-tensors in the basis (e1^2, e1e2, e2^2).
template <class T>
Mat3<T> sym2(const Mat2<T>& m) {
  if (!(m.det() - scalar::one<T>()).is_zero()) {
    throw arithmetic_error("sym2 requires determinant one");
  }
  const T &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  const T two = scalar::one<T>() + scalar::one<T>();
  Mat3<T> r;
  r.at(0, 0) = a * a;
  r.at(0, 1) = a * b;
  r.at(0, 2) = b * b;
  r.at(1, 0) = two * (a * c);
  r.at(1, 1) = a * d + b * c;
  r.at(1, 2) = two * (b * d);
  r.at(2, 0) = c * c;
  r.at(2, 1) = c * d;
  r.at(2, 2) = d * d;
  return r;
}

// Nullspace basis of a rows x cols system.  Forward elimination is
// division-free (cross-multiplied rows); back substitution divides by pivots.
template <class T>
std::vector<std::vector<T>> nullspace(std::vector<std::vector<T>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r) {
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(row)]);
    for (int r = row + 1; r < rows; ++r) {
      auto& target = m[static_cast<std::size_t>(r)];
      const auto& source = m[static_cast<std::size_t>(row)];
      if (target[static_cast<std::size_t>(col)].is_zero()) continue;
      const T f = target[static_cast<std::size_t>(col)];
      const T g = source[static_cast<std::size_t>(col)];
      for (int c = col; c < cols; ++c) {
        target[static_cast<std::size_t>(c)] =
            target[static_cast<std::size_t>(c)] * g - source[static_cast<std::size_t>(c)] * f;
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<T>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<T> x(static_cast<std::size_t>(cols), T{});
    x[static_cast<std::size_t>(free)] = scalar::one<T>();
    for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
      const int pc = pivot_cols[static_cast<std::size_t>(r)];
      const auto& mr = m[static_cast<std::size_t>(r)];
      T sum{};
      for (int c = pc + 1; c < cols; ++c) {
        if (mr[static_cast<std::size_t>(c)].is_zero()) continue;
        sum = sum + mr[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
      }
      x[static_cast<std::size_t>(pc)] =
          T{} - sum * scalar::inverse(mr[static_cast<std::size_t>(pc)]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// Basis of {T : T A = A B T and T B = B A B T}, the equivariance space whose
// one-dimensionality picks out the image of the meridian up to scale.
template <class T>
std::vector<Mat3<T>> solve_intertwiner(const Mat3<T>& a, const Mat3<T>& b) {
  std::vector<std::vector<T>> sys;
  sys.reserve(18);
  const Mat3<T> ab = a * b;
  const Mat3<T> bab = b * a * b;
  const auto add_equations = [&sys](const Mat3<T>& x, const Mat3<T>& y) {
    // Rows of T x - y T = 0: coefficient of T_{pq} in entry (i,j) is
    // [p==i] x_{qj} - [q==j] y_{ip}.
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::vector<T> row(9, T{});
        for (int p = 0; p < 3; ++p) {
          for (int q = 0; q < 3; ++q) {
            T coef{};
            if (p == i) coef = coef + x.at(q, j);
            if (q == j) coef = coef - y.at(i, p);
            row[static_cast<std::size_t>(3 * p + q)] = std::move(coef);
          }
        }
        sys.push_back(std::move(row));
      }
    }
  };
  add_equations(a, ab);
  add_equations(b, bab);

  std::vector<Mat3<T>> out;
  for (auto& vec : nullspace(std::move(sys))) {
    Mat3<T> t;
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) t.at(p, q) = std::move(vec[static_cast<std::size_t>(3 * p + q)]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

using FMat2 = Mat2<FieldElem>;
using FMat3 = Mat3<FieldElem>;

}  // namespace fig8cv
