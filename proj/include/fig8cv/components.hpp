// The point classifier and the special loci: membership of an eight-tuple of
// trace coordinates in each closed component, the curve where the totally
// reducible and partially reducible loci meet, and the boundary sextic where
// irreducible representations degenerate.

#pragma once

#include <optional>

#include "fig8cv/catalogs.hpp"
#include "fig8cv/upoly.hpp"

namespace fig8cv {

inline SqrtCtxPtr point_ctx(const CharCoords& c) {
  for (const FieldElem& e : c.tuple()) {
    if (e.ctx()) return e.ctx();
  }
  if (c.eta && c.eta->ctx()) return c.eta->ctx();
  return nullptr;
}

inline bool satisfies_catalog(const EquationCatalog& cat, const CharCoords& c) {
  const auto pt = coord_point(c);
  for (const MPoly& p : cat.polys) {
    if (!p.eval(pt).is_zero()) return false;
  }
  return true;
}

namespace detail {

// The three cubics whose common root is the extra eigenvalue parameter of a
// partially reducible character, plus the cubic expressing that the remaining
// parameter v = y - 1/w is compatible with alpha.
struct XprCubics {
  UPoly c1, c2, c3, c4;
};

inline XprCubics xpr_cubics(const CharCoords& c) {
  const UPoly w3 = UPoly::x(3), w2 = UPoly::x(2), w1 = UPoly::x(1), one = UPoly::x(0);
  XprCubics cu;
  cu.c1 = w3 - c.ybar * w2 + c.y * w1 - one;
  cu.c2 = c.alpha * w3 - c.z * w2 + one;
  cu.c3 = w3 - c.zbar * w1 + c.alpha * one;
  // (y - 1/w)^2 = w (alpha^2 - alpha - 1)/(alpha - 2), multiplied by w^2.
  const FieldElem vv =
      (c.alpha * c.alpha - c.alpha - FieldElem(1)) * (c.alpha - FieldElem(2)).inverse();
  cu.c4 = vv * w3 - (c.y * c.y) * w2 + (FieldElem(2) * c.y) * w1 - one;
  return cu;
}

}  // namespace detail

// A character is partially reducible exactly when its fiber traces pair up,
// (alpha-2)(beta-2) = 1, and the four cubics share a root.  Encoding the
// v-relation as the fourth cubic keeps the decision inside the point's own
// coefficient field: no root is ever written down.
inline bool xpr_membership(const CharCoords& c) {
  if (c.alpha != c.alphabar || c.beta != c.betabar) return false;
  if ((c.alpha - FieldElem(2)) * (c.beta - FieldElem(2)) != FieldElem(1)) return false;
  const auto cu = detail::xpr_cubics(c);
  UPoly g = gcd_univar(cu.c1, gcd_univar(cu.c2, cu.c3));
  if (g.degree() <= 0) return false;
  g = gcd_univar(g, cu.c4);
  return g.degree() >= 1;
}

// The eigenvalue parameter (v, w) behind a partially reducible character,
// when it can be written in the point's field or a single square-root
// extension of it.  Membership itself never needs this.
inline std::optional<std::pair<FieldElem, FieldElem>> xpr_parameters(const CharCoords& c) {
  if (!xpr_membership(c)) return std::nullopt;
  const auto cu = detail::xpr_cubics(c);
  const UPoly g = gcd_univar(gcd_univar(cu.c1, gcd_univar(cu.c2, cu.c3)), cu.c4);
  std::vector<FieldElem> roots;
  if (g.degree() == 1) {
    roots.push_back(*linear_root(g));
  } else if (g.degree() == 2) {
    auto rr = quadratic_roots_in_field(g, point_ctx(c));
    if (!rr && !point_ctx(c)) {
      const FieldElem disc = quadratic_discriminant(g);
      if (disc.in_base_field()) {
        rr = quadratic_roots_in_field(g, sqrt_adjoin(disc.base_part()));
      }
    }
    if (rr) {
      roots.push_back(rr->first);
      roots.push_back(rr->second);
    }
  }
  for (const FieldElem& w : roots) {
    if (w.is_zero()) continue;
    return std::make_pair(c.y - w.inverse(), w);
  }
  return std::nullopt;
}

inline ComponentSet classify(const CharCoords& c) {
  ComponentSet out;
  for (Component id : {Component::XTR, Component::V0, Component::V1, Component::V2}) {
    if (satisfies_catalog(catalog(id), c)) out.insert(id);
  }
  if (xpr_membership(c)) out.insert(Component::XPR);
  return out;
}

// The curve along which the totally and partially reducible loci meet:
// a quartic in (y, ybar) inside the totally reducible component.
inline bool xpr_xtr_curve(const CharCoords& c) {
  const FieldElem three(3);
  if (c.alpha != three || c.alphabar != three || c.beta != three || c.betabar != three) {
    return false;
  }
  if (c.z != c.y * c.y - FieldElem(2) * c.ybar) return false;
  if (c.zbar != c.ybar * c.ybar - FieldElem(2) * c.y) return false;
  const FieldElem yy = c.y * c.ybar;
  const FieldElem val = FieldElem(64) - FieldElem(28) * yy - yy * yy +
                        FieldElem(5) * (c.y.pow(3) + c.ybar.pow(3));
  return val.is_zero();
}

// The sextic in the eigenvalue w bounding the irreducible part of the
// partially reducible family, in the two equivalent parameterizations.
inline bool boundary_curve(const FieldElem& w, const FieldElem& x1) {
  if (x1 == FieldElem(1)) throw arithmetic_error("boundary sextic is undefined at x1 = 1");
  const FieldElem w3 = w.pow(3);
  const FieldElem coef = (FieldElem(2) * x1 * x1 + x1 - FieldElem(1)) *
                         (x1 - FieldElem(1)).inverse();
  return (w3 * w3 - FieldElem(2) * w3 * coef + FieldElem(1)).is_zero();
}

inline bool boundary_curve_alpha(const FieldElem& w, const FieldElem& alpha) {
  if (alpha == FieldElem(2)) throw arithmetic_error("boundary sextic is undefined at alpha = 2");
  const FieldElem w3 = w.pow(3);
  const FieldElem coef = alpha * (FieldElem(2) * alpha - FieldElem(3)) *
                         (alpha - FieldElem(2)).inverse();
  return (w3 * w3 - FieldElem(2) * w3 * coef + FieldElem(1)).is_zero();
}

// Numerator of the discriminant of the boundary sextic in w^3: it vanishes
// exactly where the six-fold eigenvalue fibre degenerates, at alpha = 1 and
// at the two roots of alpha^2 - alpha - 1.
inline FieldElem sextic_discriminant_check(const FieldElem& alpha) {
  if (alpha == FieldElem(2)) throw arithmetic_error("boundary sextic is undefined at alpha = 2");
  const FieldElem a2 = FieldElem(2) * alpha - FieldElem(3);
  return alpha * alpha * a2 * a2 - (alpha - FieldElem(2)) * (alpha - FieldElem(2));
}

namespace detail {

using OrbitRing = CubeRootRing<FieldElem>;
using OrbitRingPoint = std::map<std::string, OrbitRing>;

struct OrbitLift {
  FieldElem d;
  OrbitRingPoint at;
};

// The formal coordinate lift behind an orbit point: one nonvanishing pure
// invariant seeds the cube root, the others follow by exact division.
inline OrbitLift orbit_ring_lift(const OrbitCoords& o) {
  const FieldElem zero(0), one(1);
  int seed = -1;
  for (int k : {0, 1, 3, 4}) {
    if (!o.u[static_cast<std::size_t>(k)].is_zero()) {
      seed = k;
      break;
    }
  }
  const FieldElem d = seed >= 0 ? o.u[static_cast<std::size_t>(seed)] : one;
  const FieldElem di = d.inverse();
  const OrbitRing c = OrbitRing::root(d), c2 = c * c;
  auto cnst = [&](const FieldElem& v) { return OrbitRing::constant(d, v); };
  OrbitRing y = cnst(zero), yb = y, z = y, zb = y;
  switch (seed) {
    case 0:
      y = c;
      yb = cnst(o.u[2] * di) * c2;
      z = cnst(o.u[6] * di) * c2;
      zb = cnst(o.u[9] * di) * c;
      break;
    case 1:
      yb = c;
      y = cnst(o.u[2] * di) * c2;
      z = cnst(o.u[11] * di) * c;
      zb = cnst(o.u[7] * di) * c2;
      break;
    case 3:
      z = c;
      zb = cnst(o.u[5] * di) * c2;
      y = cnst(o.u[6] * di) * c2;
      yb = cnst(o.u[10] * di) * c;
      break;
    case 4:
      zb = c;
      z = cnst(o.u[5] * di) * c2;
      y = cnst(o.u[8] * di) * c;
      yb = cnst(o.u[7] * di) * c2;
      break;
    default:
      break;
  }
  return OrbitLift{d,
                   {{"y", y},
                    {"ybar", yb},
                    {"z", z},
                    {"zbar", zb},
                    {"alpha", cnst(o.alpha)},
                    {"alphabar", cnst(o.alphabar)},
                    {"beta", cnst(o.beta)},
                    {"betabar", cnst(o.betabar)}}};
}

// Evaluates a polynomial at the lift; vanishing in the ring is vanishing at
// all three coordinate lifts at once.
inline OrbitRing eval_on_lift(const MPoly& p, const OrbitLift& lift) {
  OrbitRing acc = OrbitRing::constant(lift.d, FieldElem(0));
  for (const auto& [mono, coef] : p.terms()) {
    OrbitRing term = OrbitRing::constant(lift.d, coef);
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      term = term * lift.at.at(var_name(static_cast<int>(k))).pow(mono[k]);
    }
    acc = acc + term;
  }
  return acc;
}

inline bool catalog_vanishes_on_orbit(Component id, const OrbitCoords& o) {
  const OrbitLift lift = orbit_ring_lift(o);
  for (const MPoly& p : catalog(id).polys) {
    if (!eval_on_lift(p, lift).is_zero()) return false;
  }
  return true;
}

}  // namespace detail

// Recovers the three coordinate lifts over an orbit point, when the seeding
// pure invariant has a cube root in the field; the lifts form one orbit of
// the center.
inline std::optional<std::array<CharCoords, 3>> lift_orbit(const OrbitCoords& o) {
  const auto cbrt = [](const FieldElem& e) -> std::optional<FieldElem> {
    if (!e.is_rational()) return std::nullopt;
    if (auto r = rational_cbrt(e.rational_value())) return FieldElem(*r);
    return std::nullopt;
  };
  const FieldElem zero(0);
  FieldElem y = zero, yb = zero, z = zero, zb = zero;
  int seed = -1;
  for (int k : {0, 1, 3, 4}) {
    if (!o.u[static_cast<std::size_t>(k)].is_zero()) {
      seed = k;
      break;
    }
  }
  if (seed >= 0) {
    const auto r = cbrt(o.u[static_cast<std::size_t>(seed)]);
    if (!r) return std::nullopt;
    const FieldElem vi = r->inverse(), vi2 = vi * vi;
    switch (seed) {
      case 0:
        y = *r, yb = o.u[2] * vi, z = o.u[6] * vi, zb = o.u[9] * vi2;
        break;
      case 1:
        yb = *r, y = o.u[2] * vi, z = o.u[11] * vi2, zb = o.u[7] * vi;
        break;
      case 3:
        z = *r, zb = o.u[5] * vi, y = o.u[6] * vi, yb = o.u[10] * vi2;
        break;
      default:
        zb = *r, z = o.u[5] * vi, y = o.u[8] * vi2, yb = o.u[7] * vi;
        break;
    }
  }
  const CharCoords c{y, yb, z, zb, o.alpha, o.alphabar, o.beta, o.betabar, o.eta};
  if (!(orbit(c) == o)) return std::nullopt;
  return std::array<CharCoords, 3>{c, mu3_act(1, c), mu3_act(2, c)};
}

// Membership decided on center-invariant coordinates.  A catalog polynomial
// either vanishes at all three coordinate lifts of an orbit point or at none
// of them, so the formal cube-root evaluation answers for the whole fibre at
// once, even when no lift exists over the coefficient field.  Partial
// reducibility has no polynomial catalog and is tested on a lift, so it is
// reported only when the orbit lifts.
inline ComponentSet classify_orbit(const OrbitCoords& o) {
  ComponentSet out;
  for (Component id : {Component::XTR, Component::V0, Component::V1, Component::V2}) {
    if (detail::catalog_vanishes_on_orbit(id, o)) out.insert(id);
  }
  if (const auto lifts = lift_orbit(o)) {
    if (xpr_membership((*lifts)[0])) out.insert(Component::XPR);
  }
  return out;
}

}  // namespace fig8cv
