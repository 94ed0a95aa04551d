// Trace coordinates of a character: the eight functions (y, ybar, z, zbar,
// alpha, alphabar, beta, betabar) plus the optional commutator trace eta, the
// center action of the cube roots of unity, the symmetries f* and h*, and the
// monomial invariants that descend to the PGL3 and GL3 pictures.
//
// Conventions: y = tr(t), z = tr(t b t), alpha = tr(a), beta = tr(b), with
// bars on inverses.  In the two-bridge presentation alpha = tr(S T S' T');
// the commutator is oriented so that its trace equals tr(a), matching the
// fibered formulas which the component constructors are built on.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "fig8cv/words.hpp"

namespace fig8cv {

struct relation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Component { XTR, XPR, V0, V1, V2 };
using ComponentSet = std::set<Component>;

inline std::string to_string(Component c) {
  switch (c) {
    case Component::XTR:
      return "XTR";
    case Component::XPR:
      return "XPR";
    case Component::V0:
      return "V0";
    case Component::V1:
      return "V1";
    case Component::V2:
      return "V2";
  }
  throw std::runtime_error("unknown component");
}

inline std::optional<Component> component_from_string(const std::string& s) {
  if (s == "XTR") return Component::XTR;
  if (s == "XPR") return Component::XPR;
  if (s == "V0") return Component::V0;
  if (s == "V1") return Component::V1;
  if (s == "V2") return Component::V2;
  return std::nullopt;
}

struct CharCoords {
  FieldElem y, ybar, z, zbar, alpha, alphabar, beta, betabar;
  std::optional<FieldElem> eta;

  std::array<FieldElem, 8> tuple() const {
    return {y, ybar, z, zbar, alpha, alphabar, beta, betabar};
  }

  friend bool operator==(const CharCoords& a, const CharCoords& b) {
    if (a.eta.has_value() != b.eta.has_value()) return false;
    if (a.eta && !(*a.eta == *b.eta)) return false;
    const auto ta = a.tuple(), tb = b.tuple();
    for (std::size_t k = 0; k < 8; ++k) {
      if (ta[k] != tb[k]) return false;
    }
    return true;
  }
  friend bool operator!=(const CharCoords& a, const CharCoords& b) { return !(a == b); }
};

inline const std::array<std::string, 8>& coord_names() {
  static const std::array<std::string, 8> names = {"y",     "ybar",     "z",    "zbar",
                                                   "alpha", "alphabar", "beta", "betabar"};
  return names;
}

inline std::string to_string(const CharCoords& c) {
  std::string out = "(";
  const auto t = c.tuple();
  for (std::size_t k = 0; k < 8; ++k) {
    if (k) out += ", ";
    out += to_string(t[k]);
  }
  if (c.eta) out += "; eta=" + to_string(*c.eta);
  out += ")";
  return out;
}

// Binds the eight coordinates (and eta when present) for polynomial
// evaluation.
inline std::map<std::string, FieldElem> coord_point(const CharCoords& c) {
  std::map<std::string, FieldElem> pt;
  const auto t = c.tuple();
  for (std::size_t k = 0; k < 8; ++k) pt[coord_names()[k]] = t[k];
  if (c.eta) pt["eta"] = *c.eta;
  return pt;
}

// The eight traces plus eta = tr rho([a,b]), read off a knot-group
// representation.  The generator relations are checked first.
inline CharCoords extract(const Representation& rho) {
  if (rho.alphabet() == Alphabet::KL) {
    throw word_error("trace coordinates are defined for knot-group representations");
  }
  if (!rho.check_relations()) throw relation_error("representation violates the group relations");
  const auto st = [](const char* text) { return Word::parse(Alphabet::ST, text); };
  CharCoords c{
      rho.trace_of(st("S")),          rho.trace_of(st("S'")),
      rho.trace_of(st("S.T")),        rho.trace_of(st("S'.T'")),
      rho.trace_of(st("S.T.S'.T'")),  rho.trace_of(st("T.S.T'.S'")),
      rho.trace_of(st("S'.T")),       rho.trace_of(st("S.T'")),
      std::nullopt};
  c.eta = rho.trace_of(longitude_word());
  return c;
}

inline FieldElem omega_power(int k) {
  k %= 3;
  if (k < 0) k += 3;
  FieldElem r(1);
  for (int j = 0; j < k; ++j) r = r * fe_w();
  return r;
}

// The center acts by scaling the degree-one coordinates with phi-weights:
//(y, ybar, z, zbar) pick up (w, w^2, w^2, w); the fiber traces are fixed.
inline CharCoords mu3_act(int k, const CharCoords& c) {
  const FieldElem w1 = omega_power(k), w2 = omega_power(2 * k);
  CharCoords r = c;
  r.y = w1 * c.y;
  r.ybar = w2 * c.ybar;
  r.z = w2 * c.z;
  r.zbar = w1 * c.zbar;
  return r;
}

// f* swaps each coordinate with its bar except beta, betabar; the action on
// eta is not part of the coordinate dictionary, so it is dropped.
inline CharCoords sym_f(const CharCoords& c) {
  return CharCoords{c.ybar, c.y, c.zbar, c.z, c.alphabar, c.alpha, c.beta, c.betabar,
                    std::nullopt};
}

// h* swaps y with ybar, sends (z, zbar) to (ybar^2 - zbar, y^2 - z) and
// cycles the fiber traces as (alpha, alphabar, beta, betabar) <- (betabar,
// beta, alpha, alphabar).
inline CharCoords sym_h(const CharCoords& c) {
  return CharCoords{c.ybar,
                    c.y,
                    c.ybar * c.ybar - c.zbar,
                    c.y * c.y - c.z,
                    c.betabar,
                    c.beta,
                    c.alpha,
                    c.alphabar,
                    std::nullopt};
}

// The same two symmetries as polynomial substitution maps on the eight
// coordinates, for symbolic composition checks.
inline std::map<std::string, MPoly> coord_identity_map() {
  std::map<std::string, MPoly> m;
  for (const auto& name : coord_names()) m[name] = MPoly::var(name);
  return m;
}

inline std::map<std::string, MPoly> sym_f_map() {
  std::map<std::string, MPoly> m;
  m["y"] = MPoly::var("ybar");
  m["ybar"] = MPoly::var("y");
  m["z"] = MPoly::var("zbar");
  m["zbar"] = MPoly::var("z");
  m["alpha"] = MPoly::var("alphabar");
  m["alphabar"] = MPoly::var("alpha");
  m["beta"] = MPoly::var("beta");
  m["betabar"] = MPoly::var("betabar");
  return m;
}

inline std::map<std::string, MPoly> sym_h_map() {
  std::map<std::string, MPoly> m;
  m["y"] = MPoly::var("ybar");
  m["ybar"] = MPoly::var("y");
  m["z"] = MPoly::var("ybar", 2) - MPoly::var("zbar");
  m["zbar"] = MPoly::var("y", 2) - MPoly::var("z");
  m["alpha"] = MPoly::var("betabar");
  m["alphabar"] = MPoly::var("beta");
  m["beta"] = MPoly::var("alpha");
  m["betabar"] = MPoly::var("alphabar");
  return m;
}

// compose(outer, inner): apply inner first, then outer.
inline std::map<std::string, MPoly> compose(const std::map<std::string, MPoly>& outer,
                                            const std::map<std::string, MPoly>& inner) {
  std::map<std::string, MPoly> m;
  for (const auto& [name, image] : outer) {
    m[name] = image.eval_with<MPoly>(inner, [](const FieldElem& c) { return MPoly(c); });
  }
  return m;
}

// The four trace identities that every character of the knot group satisfies:
// alpha = alpha beta - alphabar beta + alphabar and its three companions.
inline bool trace_identities_hold(const CharCoords& c) {
  const FieldElem &a = c.alpha, &ab = c.alphabar, &b = c.beta, &bb = c.betabar;
  return a == a * b - ab * b + ab && ab == ab * bb - a * bb + a &&
         b == b * a - bb * a + bb && bb == bb * ab - b * ab + b;
}

// Monomials in (y, ybar, z, zbar) that are fixed by the center action,
// together with the invariant fiber traces.
struct OrbitCoords {
  std::array<FieldElem, 12> u;  // y^3, ybar^3, y ybar, z^3, zbar^3, z zbar,
                                // y z, ybar zbar, y zbar^2, y^2 zbar, ybar z^2, ybar^2 z
  FieldElem alpha, alphabar, beta, betabar;
  std::optional<FieldElem> eta;

  friend bool operator==(const OrbitCoords& x, const OrbitCoords& o) {
    for (std::size_t k = 0; k < 12; ++k) {
      if (x.u[k] != o.u[k]) return false;
    }
    if (!(x.alpha == o.alpha && x.alphabar == o.alphabar && x.beta == o.beta &&
          x.betabar == o.betabar)) {
      return false;
    }
    if (x.eta.has_value() != o.eta.has_value()) return false;
    return !x.eta || *x.eta == *o.eta;
  }
  friend bool operator!=(const OrbitCoords& x, const OrbitCoords& o) { return !(x == o); }
};

inline OrbitCoords orbit(const CharCoords& c) {
  OrbitCoords o;
  const FieldElem &y = c.y, &yb = c.ybar, &z = c.z, &zb = c.zbar;
  o.u = {y * y * y,   yb * yb * yb, y * yb,      z * z * z,  zb * zb * zb, z * zb,
         y * z,       yb * zb,      y * zb * zb, y * y * zb, yb * z * z,   yb * yb * z};
  o.alpha = c.alpha;
  o.alphabar = c.alphabar;
  o.beta = c.beta;
  o.betabar = c.betabar;
  o.eta = c.eta;
  return o;
}

inline std::array<FieldElem, 12> pgl3_coords(const CharCoords& c) { return orbit(c).u; }

struct GL3Coords {
  std::array<FieldElem, 12> u;
  std::array<FieldElem, 6> v;  // y l^2, y^2 l, ybar l, z l, zbar l^2, zbar^2 l
};

inline GL3Coords gl3_coords(const CharCoords& c, const FieldElem& lambda) {
  if (lambda.is_zero()) throw arithmetic_error("the similarity factor must be nonzero");
  GL3Coords g;
  g.u = pgl3_coords(c);
  const FieldElem l2 = lambda * lambda;
  g.v = {c.y * l2, c.y * c.y * lambda,   c.ybar * lambda,
         c.z * lambda, c.zbar * l2, c.zbar * c.zbar * lambda};
  return g;
}

// The ring K[c]/(c^3 - d0): formal cube-root lifts of orbit data.  A monomial
// that is semi-invariant under the center vanishes at one lift exactly when
// it vanishes in this ring, so no actual cube root is ever taken.
template <class T>
class CubeRootRing {
 public:
  explicit CubeRootRing(T d0) : d0_(std::move(d0)) {}

  static CubeRootRing root(const T& d0) {
    CubeRootRing r(d0);
    r.c_[1] = scalar::one<T>();
    return r;
  }

  static CubeRootRing constant(const T& d0, const T& value) {
    CubeRootRing r(d0);
    r.c_[0] = value;
    return r;
  }

  const T& component(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const T& radicand() const { return d0_; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  friend CubeRootRing operator+(const CubeRootRing& x, const CubeRootRing& y) {
    x.check_same(y);
    CubeRootRing r(x.d0_);
    for (std::size_t k = 0; k < 3; ++k) r.c_[k] = x.c_[k] + y.c_[k];
    return r;
  }
  friend CubeRootRing operator-(const CubeRootRing& x, const CubeRootRing& y) {
    x.check_same(y);
    CubeRootRing r(x.d0_);
    for (std::size_t k = 0; k < 3; ++k) r.c_[k] = x.c_[k] - y.c_[k];
    return r;
  }
  friend CubeRootRing operator*(const CubeRootRing& x, const CubeRootRing& y) {
    x.check_same(y);
    CubeRootRing r(x.d0_);
    r.c_[0] = x.c_[0] * y.c_[0] + x.d0_ * (x.c_[1] * y.c_[2] + x.c_[2] * y.c_[1]);
    r.c_[1] = x.c_[0] * y.c_[1] + x.c_[1] * y.c_[0] + x.d0_ * (x.c_[2] * y.c_[2]);
    r.c_[2] = x.c_[0] * y.c_[2] + x.c_[1] * y.c_[1] + x.c_[2] * y.c_[0];
    return r;
  }
  friend CubeRootRing operator*(const T& s, const CubeRootRing& x) {
    CubeRootRing r(x.d0_);
    for (std::size_t k = 0; k < 3; ++k) r.c_[k] = s * x.c_[k];
    return r;
  }

  CubeRootRing pow(unsigned e) const {
    CubeRootRing r = constant(d0_, scalar::one<T>());
    CubeRootRing base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

 private:
  void check_same(const CubeRootRing& o) const {
    if (!(d0_ - o.d0_).is_zero()) throw arithmetic_error("mixing different cube-root rings");
  }

  std::array<T, 3> c_{};
  T d0_;
};

}  // namespace fig8cv
