#pragma once
// Exact constructors for points and representations on every component of the
// character variety: the reducible loci, the three families of irreducible
// representations with their double coverings, the five metabelian characters,
// and the triangle-group slice with its Dehn filling compositions.
//
// Each family takes affine parameters plus a branch sign for the square root
// of the covering discriminant.  Matrices are produced whenever the published
// charts apply and the meridian intertwiner is one-dimensional with invertible
// representative; the orbit coordinates are always available because every
// center-invariant monomial has a closed form on the covering.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fig8cv/components.hpp"
#include "fig8cv/words.hpp"

namespace fig8cv {

// ---------------------------------------------------------------------------
// Reducible characters.
// ---------------------------------------------------------------------------

// Character of a diagonal representation: both fiber generators act trivially
// on traces, and the longitude is trivial.
inline CharCoords xtr_point(const FieldElem& y, const FieldElem& ybar) {
  const FieldElem two(2), three(3);
  return CharCoords{y,     ybar,  y * y - two * ybar, ybar * ybar - two * y,
                    three, three, three,              three,
                    three};
}

// Character of a rank 2 plus rank 1 block representation, parametrized by the
// trace v and determinant w of the meridian's 2x2 block and the trace x1 of
// the fiber generators' block.
inline CharCoords xpr_point(const FieldElem& v, const FieldElem& w, const FieldElem& x1) {
  const FieldElem one(1);
  if (w.is_zero()) throw arithmetic_error("the block determinant w must be nonzero");
  if (x1 == one) throw arithmetic_error("x1 = 1 leaves the block traces undefined");
  const FieldElem x1m = x1 - one;
  if ((x1 * x1 + x1 - one) * x1m.inverse() * w != v * v)
    throw arithmetic_error("(v, w, x1) does not satisfy the partially reducible constraint");
  const FieldElem alpha = x1 + one;
  const FieldElem beta = x1 * x1m.inverse() + one;
  const FieldElem wi = w.inverse();
  CharCoords c;
  c.y = v + wi;
  c.ybar = w + v * wi;
  c.z = w * alpha + wi * wi;
  c.zbar = alpha * wi + w * w;
  c.alpha = alpha;
  c.alphabar = alpha;
  c.beta = beta;
  c.betabar = beta;
  return c;
}

// The five characters of metabelian representations: all trace coordinates of
// odd-length words vanish and the longitude is trivial.
inline std::vector<CharCoords> metabelian_points() {
  const FieldElem zero(0), one(1), mone(-1), three(3);
  const FieldElem ip = mone + FieldElem(2) * fe_i();
  const FieldElem im = mone - FieldElem(2) * fe_i();
  const auto mk = [&](const FieldElem& a, const FieldElem& ab, const FieldElem& b,
                      const FieldElem& bb) {
    return CharCoords{zero, zero, zero, zero, a, ab, b, bb, three};
  };
  return {mk(mone, mone, mone, mone), mk(one, one, ip, im), mk(one, one, im, ip),
          mk(ip, im, one, one), mk(im, ip, one, one)};
}

// ---------------------------------------------------------------------------
// The double coverings of the irreducible families.
// ---------------------------------------------------------------------------

// Square root of a covering discriminant.  A root already available in the
// working field is used directly; otherwise the quadratic extension is
// created, which requires the radicand to lie in the cyclotomic base field.
inline FieldElem discriminant_root(const FieldElem& delta, int branch) {
  if (delta.is_zero()) return FieldElem(0);
  const FieldElem r = [&] {
    if (auto in = delta.sqrt_in_field()) return *in;
    if (!delta.in_base_field())
      throw field_mismatch("the discriminant root would need a second quadratic extension");
    return FieldElem::root_of(sqrt_adjoin(delta.base_part()));
  }();
  return branch >= 0 ? r : -r;
}

struct FamilyMatrices {
  FMat3 a, b, t0;  // fiber generator images and the unnormalized meridian
  FieldElem d0;    // det t0
};

struct OrbitFamily {
  Component id = Component::V0;
  OrbitCoords orbit;
  FieldElem sqrt_delta;
  std::optional<FamilyMatrices> mats;
  bool reducible_boundary = false;
};

// Center-invariant coordinates of the representation t -> T0 / d0^(1/3),
// a -> A, b -> B.  Every stored monomial has weight divisible by three, so
// the formal cube root cancels and the values stay in the field.
inline OrbitCoords orbit_from_matrices(const FMat3& a, const FMat3& b, const FMat3& t0) {
  const FieldElem d0 = t0.det();
  if (d0.is_zero()) throw arithmetic_error("normalize-by-limit unsupported at this point");
  const FMat3 adj = t0.adj();
  const FMat3 ai = a.inverse();
  const FieldElem y0 = t0.trace();
  const FieldElem yb0 = adj.trace();
  const FieldElem z0 = (t0 * ai * t0 * a).trace();
  const FieldElem zb0 = (ai * adj * a * adj).trace();
  const FieldElem d1 = d0.inverse();
  const FieldElem d2 = d1 * d1, d3 = d2 * d1, d4 = d2 * d2;
  OrbitCoords o;
  o.u = {y0.pow(3) * d1,      yb0.pow(3) * d2,    y0 * yb0 * d1,      z0.pow(3) * d2,
         zb0.pow(3) * d4,     z0 * zb0 * d2,      y0 * z0 * d1,       yb0 * zb0 * d2,
         y0 * zb0 * zb0 * d3, y0 * y0 * zb0 * d2, yb0 * z0 * z0 * d2, yb0 * yb0 * z0 * d2};
  o.alpha = a.trace();
  o.alphabar = ai.trace();
  o.beta = b.trace();
  o.betabar = b.inverse().trace();
  o.eta = (a * b * ai * b.inverse()).trace();
  return o;
}

namespace detail {

// Orbit coordinates on the first family, where z = y^2 - ybar and
// zbar = ybar^2 - y at orbit level.
inline OrbitCoords v2_orbit(const FieldElem& alpha, const FieldElem& alphabar,
                            const FieldElem& s) {
  const FieldElem one(1), two(2), three(3), five(5);
  const FieldElem half = two.inverse();
  const FieldElem e = alpha * alphabar + five * (alpha + alphabar) + five;
  const FieldElem u0 = (e + s) * half, u1 = (e - s) * half;
  const FieldElem u2 = alpha + alphabar + two;
  OrbitCoords o;
  o.u[0] = u0;
  o.u[1] = u1;
  o.u[2] = u2;
  o.u[3] = u0 * u0 - three * u0 * u2 + three * u2 * u2 - u1;
  o.u[4] = u1 * u1 - three * u1 * u2 + three * u2 * u2 - u0;
  o.u[5] = u2 * u2 - u0 - u1 + u2;
  o.u[6] = u0 - u2;
  o.u[7] = u1 - u2;
  o.u[8] = u1 * u2 - two * u2 * u2 + u0;
  o.u[9] = u2 * u2 - u0;
  o.u[10] = u0 * u2 - two * u2 * u2 + u1;
  o.u[11] = u2 * u2 - u1;
  o.alpha = alpha;
  o.alphabar = alphabar;
  o.beta = one;
  o.betabar = one;
  o.eta = u1 - three * (alpha + alphabar + one);
  return o;
}

// Orbit coordinates on the second family, where z = ybar and zbar = y.
inline OrbitCoords v1_orbit(const FieldElem& beta, const FieldElem& betabar,
                            const FieldElem& s) {
  const FieldElem one(1), two(2), three(3), five(5);
  const FieldElem half = two.inverse();
  const FieldElem e = beta * betabar + five * (beta + betabar) + five;
  const FieldElem u0 = (e - s) * half, u1 = (e + s) * half;
  const FieldElem u2 = beta + betabar + two;
  OrbitCoords o;
  o.u = {u0, u1, u2, u1, u0, u2, u2, u2, u0, u0, u1, u1};
  o.alpha = one;
  o.alphabar = one;
  o.beta = beta;
  o.betabar = betabar;
  o.eta = u0 - three * (beta + betabar + one);
  return o;
}

// Orbit coordinates on the symmetric family.  The pure invariants come from
// the published identity block; the mixed monomials y^2 zbar, ybar^2 z,
// y zbar^2 and ybar z^2 are regular on the covering because their cubes are,
// and their closed forms below were obtained by exact division of invariant
// products (their symmetric sums match the published ones).
inline OrbitCoords v0_orbit(const FieldElem& alpha, const FieldElem& beta, const FieldElem& s) {
  const FieldElem one(1), two(2), three(3);
  const FieldElem half = two.inverse();
  const FieldElem a2 = alpha * alpha, b2 = beta * beta;
  const FieldElem e3 = a2 * beta + alpha * b2 + FieldElem(6) * alpha * beta +
                       three * (alpha + beta) + two;
  const FieldElem f4 = a2 * a2 * b2 + FieldElem(10) * a2 * beta + FieldElem(9) * a2 -
                       two * a2 * alpha - two;
  const FieldElem g = a2 * alpha * beta + three * a2 - FieldElem(4) * alpha;
  const FieldElem h = a2 * beta + three * alpha * beta + three * alpha + one;
  const FieldElem h2 = a2 * b2 + FieldElem(4) * a2 * beta + two * a2 +
                       FieldElem(4) * alpha * beta + two * alpha + two * beta + one;
  const FieldElem h3 = a2 * alpha * b2 + a2 * alpha * beta + FieldElem(4) * a2 * beta +
                       three * a2 + FieldElem(5) * alpha * beta + three * alpha - one;
  const FieldElem q9 = alpha * beta - one;
  const FieldElem q8 = a2 * beta + a2 - alpha - one;
  const FieldElem p = a2 * b2 - two * a2 * beta - two * alpha * b2 + two * a2 + two * b2 - three;
  const FieldElem f = alpha * beta - two * alpha - two * beta + three;
  OrbitCoords o;
  o.u[0] = (e3 - (alpha - beta) * s) * half;
  o.u[1] = (e3 + (alpha - beta) * s) * half;
  o.u[2] = (alpha + one) * (beta + one);
  o.u[3] = (f4 - g * s) * half;
  o.u[4] = (f4 + g * s) * half;
  o.u[5] = one + a2 + two * a2 * beta;
  o.u[6] = (h + (one - alpha) * s) * half;
  o.u[7] = (h - (one - alpha) * s) * half;
  o.u[8] = (h3 + q8 * s) * half;
  o.u[9] = (h2 + q9 * s) * half;
  o.u[10] = (h3 - q8 * s) * half;
  o.u[11] = (h2 - q9 * s) * half;
  o.alpha = alpha;
  o.alphabar = alpha;
  o.beta = beta;
  o.betabar = beta;
  o.eta = (p - f * s) * half;
  return o;
}

// Meridian image on the first family, main chart: the unique solution with
// unit entries (2,1) and (3,1) of the system tr(A) = tr(AB), tr(B) = tr(BA^-1),
// tr(B) = tr(B^2 A), the mirrored equations for the inverses, det(A) = 1,
// tr(A) = alpha and tr(A^-1) = alphabar, where B = diag(1, i, -i).
inline FMat3 v2_main_a(const FieldElem& alpha, const FieldElem& alphabar, const FieldElem& s) {
  const FieldElem one(1), two(2), four(4), i = fe_i();
  const FieldElem q = alpha * alpha - two * alphabar + one;
  const FieldElem qi = q.inverse();
  const FieldElem c8m = (one - i) * FieldElem(8).inverse();
  const FieldElem c8p = (one + i) * FieldElem(8).inverse();
  const FieldElem c4m = (one - i) * four.inverse();
  const FieldElem c4p = (one + i) * four.inverse();
  const FieldElem num =
      alpha.pow(3) - alpha * alpha - four * alpha * alphabar - alpha + FieldElem(5);
  return FMat3((alpha + one) * two.inverse(), c8m * q, c8p * q,
               one, c4m * (alpha - one), c4p * (num + two * i * s) * qi,
               one, c4m * (num - two * i * s) * qi, c4p * (alpha - one));
}

// Meridian images on the locus alpha^2 - 2 alphabar + 1 = 0, where the main
// chart degenerates.  The same trace system is solved with entry (3,1) or
// (2,1) set to zero instead; the two alternates select the two sheets.
inline FMat3 v2_degenerate_a(const FieldElem& alpha, int which) {
  const FieldElem zero(0), one(1), two(2), i = fe_i();
  const FieldElem c4m = (one - i) * FieldElem(4).inverse();
  const FieldElem c4p = (one + i) * FieldElem(4).inverse();
  const FieldElem e8 = FieldElem(8).inverse();
  const FieldElem top = (alpha + one) * two.inverse();
  const FieldElem p1 =
      (-alpha.pow(3) - alpha * alpha - FieldElem(3) * alpha + FieldElem(5)) * e8;
  const FieldElem p2 = (-(alpha * alpha) - two * alpha - FieldElem(5)) * e8;
  if (which > 0) {
    return FMat3(top, zero, p1,
                 one, c4m * (alpha - one), p2,
                 zero, one, c4p * (alpha - one));
  }
  return FMat3(top, p1, zero,
               zero, c4m * (alpha - one), one,
               one, p2, c4p * (alpha - one));
}

inline FMat3 v2_b() {
  const FieldElem zero(0), one(1), i = fe_i();
  return FMat3(one, zero, zero, zero, i, zero, zero, zero, -i);
}

// Fiber generators of the symmetric family.
inline FMat3 v0_b(const FieldElem& beta) {
  const FieldElem zero(0), one(1);
  return FMat3(one, zero, zero, zero, beta - one, one, zero, -one, zero);
}

inline FMat3 v0_a(const FieldElem& alpha, const FieldElem& beta, const FieldElem& s) {
  const FieldElem one(1), two(2), three(3);
  const FieldElem b3 = beta - three, b1 = beta + one, ba = beta - alpha;
  const FieldElem f = alpha * beta - two * alpha - two * beta + three;
  const FieldElem den = (b3 * b3 * b1).inverse();
  const FieldElem dlow = (two * b3 * b1 * ba).inverse();
  const FieldElem sb = b3 * b1 * s;
  const FieldElem a2 = alpha * alpha, b2 = beta * beta, bc = b2 * beta, bq = b2 * b2;
  const FieldElem n22 = FieldElem(4) * a2 - alpha * bc + FieldElem(4) * alpha * b2 -
                        FieldElem(9) * alpha * beta - FieldElem(6) * alpha +
                        FieldElem(7) * b2 - FieldElem(6) * beta - FieldElem(9);
  const FieldElem n23 = FieldElem(4) * alpha * bc - alpha * bq + FieldElem(5) * bc -
                        FieldElem(5) * alpha * b2 + two * a2 * beta - FieldElem(8) * b2 -
                        two * a2 - two * alpha * beta - FieldElem(9) * beta;
  const FieldElem n33 = alpha * bc + two * bc - FieldElem(8) * alpha * b2 + two * a2 * beta -
                        FieldElem(5) * b2 - two * a2 + FieldElem(5) * alpha * beta +
                        FieldElem(6) * alpha + FieldElem(6) * beta + FieldElem(9);
  return FMat3((alpha * beta - two * alpha - beta) * b3.inverse(),
               two * f * ba * den,
               f * ba * (beta - one) * den,
               one, (n22 + sb) * dlow, (n23 + sb * (beta - two)) * dlow,
               one, (n22 - sb) * dlow, (n33 - sb) * dlow);
}

// Attaches (A, B, T0, d0) to the family when the meridian intertwiner space
// is one-dimensional, its representative is invertible, and the resulting
// orbit agrees with the closed forms on the requested sheet.
inline bool attach_matrices(OrbitFamily& fam, const FMat3& a, const FMat3& b) {
  const auto basis = solve_intertwiner(a, b);
  if (basis.size() != 1) return false;
  const FieldElem d0 = basis[0].det();
  if (d0.is_zero()) return false;
  if (!(orbit_from_matrices(a, b, basis[0]) == fam.orbit)) return false;
  fam.mats = FamilyMatrices{a, b, basis[0], d0};
  return true;
}

}  // namespace detail

// Double covering of the family with beta = betabar = 1, parametrized by
// (alpha, alphabar) and a sheet choice.  Matrices come from the published
// charts; the orbit coordinates are closed forms on the covering, so they are
// available even where the charts degenerate or the intertwiner normalization
// breaks down.
inline OrbitFamily v2_family(const FieldElem& alpha, const FieldElem& alphabar,
                             int branch = +1) {
  const FieldElem one(1);
  const FieldElem delta = w_catalog(Component::V2)
                              .discriminant()
                              .eval({{"alpha", alpha}, {"alphabar", alphabar}});
  const FieldElem s = discriminant_root(delta, branch);
  OrbitFamily fam;
  fam.id = Component::V2;
  fam.sqrt_delta = s;
  fam.orbit = detail::v2_orbit(alpha, alphabar, s);
  fam.reducible_boundary = alpha == one && alphabar == one;
  const FMat3 b = detail::v2_b();
  const FieldElem q = alpha * alpha - FieldElem(2) * alphabar + one;
  if (!q.is_zero()) {
    detail::attach_matrices(fam, detail::v2_main_a(alpha, alphabar, s), b);
  } else {
    detail::attach_matrices(fam, detail::v2_degenerate_a(alpha, +1), b) ||
        detail::attach_matrices(fam, detail::v2_degenerate_a(alpha, -1), b);
  }
  return fam;
}

// Double covering of the family with alpha = alphabar = 1.  The outer
// symmetry exchanging the two families sends the fiber pair (a, b) to a
// simultaneous conjugate of (b^-1, a), so the matrices are obtained from the
// other family's charts by that swap, with the meridian intertwiner solved
// afresh.
inline OrbitFamily v1_family(const FieldElem& beta, const FieldElem& betabar, int branch = +1) {
  const FieldElem one(1);
  const FieldElem delta =
      w_catalog(Component::V1).discriminant().eval({{"beta", beta}, {"betabar", betabar}});
  const FieldElem s = discriminant_root(delta, branch);
  OrbitFamily fam;
  fam.id = Component::V1;
  fam.sqrt_delta = s;
  fam.orbit = detail::v1_orbit(beta, betabar, s);
  fam.reducible_boundary = beta == one && betabar == one;
  const FMat3 a = detail::v2_b().inverse();
  const FieldElem q = beta * beta - FieldElem(2) * betabar + one;
  if (!q.is_zero()) {
    detail::attach_matrices(fam, a, detail::v2_main_a(beta, betabar, s));
  } else {
    detail::attach_matrices(fam, a, detail::v2_degenerate_a(beta, +1)) ||
        detail::attach_matrices(fam, a, detail::v2_degenerate_a(beta, -1));
  }
  return fam;
}

// Double covering of the family with alpha = alphabar and beta = betabar,
// parametrized by (alpha, beta).  The published chart excludes beta in
// {3, -1, alpha}; the orbit closed forms cover the excluded locus.
inline OrbitFamily v0_family(const FieldElem& alpha, const FieldElem& beta, int branch = +1) {
  const FieldElem one(1), two(2), three(3);
  const auto& wc = w_catalog(Component::V0);
  MPoly delta_poly;
  for (const auto& [factor, mult] : wc.disc_factors) {
    if (mult == 1) delta_poly = factor;
  }
  const FieldElem delta = delta_poly.eval({{"alpha", alpha}, {"beta", beta}});
  const FieldElem s = discriminant_root(delta, branch);
  OrbitFamily fam;
  fam.id = Component::V0;
  fam.sqrt_delta = s;
  fam.orbit = detail::v0_orbit(alpha, beta, s);
  fam.reducible_boundary =
      (alpha * beta - two * alpha - two * beta + three).is_zero();
  if (beta != three && beta != -one && beta != alpha) {
    detail::attach_matrices(fam, detail::v0_a(alpha, beta, s), detail::v0_b(beta));
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Constructive section of the orbit map.
// ---------------------------------------------------------------------------

// Recovers the three coordinate lifts of an orbit point when the needed cube
// root is rational.  The seed cube root fixes one coordinate; the others
// follow by exact division, and the candidate is verified against the input
// before the twists are returned.
// ---------------------------------------------------------------------------
// The triangle-group slice.
// ---------------------------------------------------------------------------

struct SlicePoint {
  FieldElem x0, x1, y0, y1;
};

struct WPoint {
  FieldElem nu, nubar, zeta;
};

inline std::map<std::string, FieldElem> slice_point(const SlicePoint& p) {
  return {{"x0", p.x0}, {"x1", p.x1}, {"y0", p.y0}, {"y1", p.y1}};
}

inline std::map<std::string, FieldElem> w_point(const WPoint& q) {
  return {{"nu", q.nu}, {"nubar", q.nubar}, {"zeta", q.zeta}};
}

// The surface of slice parameters on which the order-four relation holds.
inline const std::array<MPoly, 2>& slice_ideal() {
  static const std::array<MPoly, 2> gens = {
      parse_poly("x0*y0 + x1 - y1 - 2"),
      parse_poly("x0*y1 - x1*y1 - x0 - y0 + y1 - 2")};
  return gens;
}

inline bool on_slice(const SlicePoint& p) {
  const auto pt = slice_point(p);
  for (const auto& gen : slice_ideal()) {
    if (!gen.eval(pt).is_zero()) return false;
  }
  return true;
}

// The trace hypersurface carrying the triangle-group characters.
inline const MPoly& w_hypersurface() {
  static const MPoly h = parse_poly(
      "zeta^2 - nu*nubar*zeta + 2*zeta + nu^3 + nubar^3 - 5*nu*nubar + 5");
  return h;
}

inline bool on_w(const WPoint& q) { return w_hypersurface().eval(w_point(q)).is_zero(); }

// Order-three generator images; the product has order four exactly on the
// slice surface.
inline Representation slice_rep(const SlicePoint& p) {
  if (!on_slice(p)) throw arithmetic_error("the point is off the slice surface");
  const FieldElem zero(0), one(1);
  const FMat3 k(zero, zero, one, p.x0, one, p.x1, -one, zero, -one);
  const FMat3 l(one, p.y0, p.y1, zero, -one, -one, zero, one, zero);
  return Representation(Alphabet::KL, {k, l});
}

// Trace coordinates of a slice representation, ordered so that the first
// component is the meridian trace of the filled representation and the
// second its inverse trace; this order makes slice_g a two-sided inverse.
inline const std::array<MPoly, 3>& slice_f_polys() {
  static const std::array<MPoly, 3> f = {
      parse_poly("x0*y1 - x1 + y0 - y1 + 1"),
      parse_poly("x0*y0 - x1*y0 + x0 + y1 - 2"),
      parse_poly("x0^2*y0*y1 - x0*x1*y0*y1 - x0^2*y0 + x0*y0^2 - x1*y0^2 + x0*x1*y1 "
                 "- x1^2*y1 - x0*y0*y1 + x1*y0*y1 + x0*y1^2 - x0*x1 + 2*x0*y0 - x1*y0 "
                 "- 3*x0*y1 + 2*x1*y1 + y0*y1 - y1^2 + 4*x0 - x1 - 2*y0 - 2")};
  return f;
}

inline WPoint slice_f(const SlicePoint& p) {
  if (!on_slice(p)) throw arithmetic_error("the point is off the slice surface");
  const auto pt = slice_point(p);
  const auto& f = slice_f_polys();
  return WPoint{f[0].eval(pt), f[1].eval(pt), f[2].eval(pt)};
}

// The six lines of the trace hypersurface on which the rational section g is
// undefined, reported by index.  The first three lie on zeta = 1, the other
// three on nu nubar = zeta + 3.
inline std::set<int> y_locus_components(const WPoint& q) {
  const FieldElem one(1), two(2), three(3);
  const FieldElem r6 = fe_w() + one;  // primitive sixth root of unity
  const FieldElem r62 = r6 * r6;
  const FieldElem l1 = q.nu + q.nubar + two;
  const FieldElem l2 = q.nu + r62 * q.nubar - two * r6;
  const FieldElem l3 = q.nu - r6 * q.nubar + two * r62;
  const FieldElem zm = q.zeta - one;
  const FieldElem nb2 = q.nubar * q.nubar;
  std::set<int> out;
  if (zm.is_zero() && l1.is_zero()) out.insert(1);
  if (zm.is_zero() && l2.is_zero()) out.insert(2);
  if (zm.is_zero() && l3.is_zero()) out.insert(3);
  if (l1.is_zero() && (nb2 + two * q.nubar + q.zeta + three).is_zero()) out.insert(4);
  if (l2.is_zero() && (nb2 + two * r62 * q.nubar - r6 * q.zeta - three * r6).is_zero())
    out.insert(5);
  if (l3.is_zero() && (nb2 - two * r6 * q.nubar + r62 * q.zeta + three * r62).is_zero())
    out.insert(6);
  return out;
}

// Rational section of the trace coordinates, inverse to slice_f away from the
// six exceptional lines.
inline SlicePoint slice_g(const WPoint& q) {
  if (!on_w(q)) throw arithmetic_error("the point is off the trace hypersurface");
  const FieldElem one(1), two(2), three(3);
  const FieldElem d1 = q.zeta - one;
  if (d1.is_zero())
    throw arithmetic_error("the section is undefined where zeta - 1 vanishes");
  const FieldElem d2 = q.zeta + three - q.nu * q.nubar;
  if (d2.is_zero())
    throw arithmetic_error("the section is undefined where nu nubar - zeta - 3 vanishes");
  const FieldElem d1i = d1.inverse(), d2i = d2.inverse();
  const FieldElem n2 = q.nu * q.nu, nb2 = q.nubar * q.nubar, nn = q.nu * q.nubar;
  return SlicePoint{
      (n2 + nn - two * q.nubar - q.zeta - three) * d1i,
      (n2 - nb2 + two * q.nu - two * q.nubar + q.zeta - one) * d1i,
      (nn - nb2 + two * q.nu - two * q.zeta - two) * d2i,
      (-n2 + two * q.nubar - q.zeta + one) * d2i};
}

// Knot group representation through the (3,3,4) triangle quotient.  The plain
// quotient lands on the family with beta = betabar = 1; composing with the
// outer symmetry first lands on the other family.
inline Representation dehn_rep(const SlicePoint& p, Component target) {
  if (target != Component::V1 && target != Component::V2)
    throw arithmetic_error("filling characters land on the V1 or V2 family");
  const Representation rho = slice_rep(p);
  // The two orders of the triangle generator pair pull back to mirror
  // characters; this order makes the slice coordinate nu return as the
  // meridian trace y, and puts zeta at betabar on the second family.
  const Representation mirrored(
      Alphabet::KL,
      {rho.eval(Word::parse(Alphabet::KL, "l")), rho.eval(Word::parse(Alphabet::KL, "k"))});
  std::vector<FMat3> images;
  for (const char* name : {"t", "a", "b"}) {
    Word w = Word::parse(Alphabet::TAB, name);
    if (target == Component::V1) w = apply_automorphism(Symmetry::h, w);
    images.push_back(mirrored.eval(dehn_phi(w)));
  }
  return Representation(Alphabet::TAB, images);
}

}  // namespace fig8cv
