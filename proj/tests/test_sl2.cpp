#include <catch2/catch_amalgamated.hpp>

#include "fig8cv/components.hpp"
#include "fig8cv/sampling.hpp"
#include "fig8cv/sl2.hpp"

using namespace fig8cv;

namespace {

// The constraint the relation imposes on the parameters of a Riley-shaped
// pair, derived symbolically in the first test below and frozen here:
// q(s, u) = s^2 u^2 + (s^4 - 3 s^2 + 1)(u - 1).
FieldElem riley_constraint(const FieldElem& s, const FieldElem& u) {
  const FieldElem s2 = s * s;
  const FieldElem c = s2 * s2 - FieldElem(3) * s2 + FieldElem(1);
  return s2 * u * u + c * (u - FieldElem(1));
}

}  // namespace

TEST_CASE("the relation confines riley parameters to a quadratic") {
  // Expand the two sides of the group relation over the rational function
  // field in (s, u); every entry of the difference must be a multiple of one
  // quadratic in u.
  const RatFunc s{MPoly::var("s")}, u{MPoly::var("u")};
  const RatFunc one{MPoly(FieldElem(1))}, zero{MPoly(FieldElem(0))};
  const Mat2<RatFunc> S(s, one, zero, one / s), T(s, zero, u, one / s);
  const Mat2<RatFunc> L = S * T.inverse() * S.inverse() * T * S;
  const Mat2<RatFunc> R = T * S * T.inverse() * S.inverse() * T;

  const MPoly q = parse_poly("s^2*u^2+s^4*u-3*s^2*u+u-s^4+3*s^2-1");
  // q is not monic in u, so divide by pseudo-reduction: multiplying by the
  // leading coefficient s^2 keeps everything polynomial, and s^2 is coprime
  // to q, so a vanishing remainder still certifies divisibility.
  const auto divisible_by_q = [&q](MPoly r) {
    const MPoly s2 = MPoly::var("s", 2);
    auto cs = r.coefficients_in("u");
    while (cs.size() > 2) {
      const auto d = cs.size() - 1;
      r = s2 * r - cs.back() * MPoly::var("u", static_cast<unsigned>(d - 2)) * q;
      cs = r.coefficients_in("u");
      REQUIRE(cs.size() <= d);
    }
    return r.is_zero();
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const MPoly num = (L.at(i, j) - R.at(i, j)).num();
      if (num.is_zero()) continue;
      CHECK(divisible_by_q(num));
    }
  }
  // Both off-diagonal entries are nonzero multiples, so the relation holds
  // exactly on q = 0.
  CHECK_FALSE((L.at(0, 1) - R.at(0, 1)).num().is_zero());
  CHECK_FALSE((L.at(1, 0) - R.at(1, 0)).num().is_zero());
}

TEST_CASE("riley constructor accepts exactly the quadratic locus") {
  // u = 0 forces s^4 - 3 s^2 + 1 = 0: the two reducible characters that sit
  // on the irreducible curve.  A generic s is rejected.
  CHECK_THROWS_AS(riley_rep(FieldElem(2), FieldElem(0)), relation_error);
  CHECK_THROWS_AS(riley_rep(FieldElem(1), FieldElem(1)), relation_error);
  CHECK_THROWS_AS(riley_rep(FieldElem(0), FieldElem(1)), arithmetic_error);

  const auto ctx5 = sqrt_adjoin(Cyclo12(5));
  const FieldElem golden = (FieldElem(1) + FieldElem::root_of(ctx5)) * FieldElem(2).inverse();
  CHECK(riley_constraint(golden, FieldElem(0)).is_zero());
  const SL2Rep red = riley_rep(golden, FieldElem(0));
  const SL2Coords rc = sl2_coords(red);
  CHECK(rc.x1 == FieldElem(2));
  CHECK(rc.x2 == FieldElem(2));
  CHECK(rc.y0 * rc.y0 == FieldElem(5));
  CHECK(classify_sl2(rc) ==
        SL2LocusSet{SL2Locus::reducible_line, SL2Locus::irreducible_curve});

  // The parabolic case: s = 1 gives u^2 - u + 1 = 0, solved by a sixth root
  // of unity already inside the ground field.
  const FieldElem u0 = fe_w() + FieldElem(1);
  CHECK(riley_constraint(FieldElem(1), u0).is_zero());
  const SL2Rep par = riley_rep(FieldElem(1), u0);
  const SL2Coords pc = sl2_coords(par);
  CHECK(pc.y0 == FieldElem(2));
  CHECK((pc.x1 - FieldElem(1)) * (pc.x2 - FieldElem(1)) == FieldElem(1));
  CHECK(pc.y0 * pc.y0 == pc.x1 + pc.x2 + FieldElem(1));
  CHECK(classify_sl2(pc) == SL2LocusSet{SL2Locus::irreducible_curve});

  // Generic eigenvalues: solve the quadratic in u over a square-root
  // extension and confirm acceptance plus the Fricke identities.
  Sampler rng(61);
  int solved = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const FieldElem s = FieldElem(rng.nonzero_rational());
    const FieldElem s2 = s * s;
    const FieldElem c = s2 * s2 - FieldElem(3) * s2 + FieldElem(1);
    if (c.is_zero()) continue;
    const UPoly quad = s2 * UPoly::x(2) + c * UPoly::x(1) - c * UPoly::x(0);
    auto roots = quadratic_roots_in_field(quad);
    if (!roots) {
      const FieldElem disc = quadratic_discriminant(quad);
      REQUIRE(disc.in_base_field());
      roots = quadratic_roots_in_field(quad, sqrt_adjoin(disc.base_part()));
    }
    REQUIRE(roots.has_value());
    for (const FieldElem& u : {roots->first, roots->second}) {
      CHECK(riley_constraint(s, u).is_zero());
      const SL2Rep rho = riley_rep(s, u);
      const SL2Coords fc = sl2_coords(rho);
      if (u.is_zero()) continue;
      CHECK((fc.x1 - FieldElem(1)) * (fc.x2 - FieldElem(1)) == FieldElem(1));
      CHECK(fc.y0 * fc.y0 == fc.x1 + fc.x2 + FieldElem(1));
      CHECK(fc.y0 == s + s.inverse());
      ++solved;
    }
  }
  CHECK(solved >= 10);
}

TEST_CASE("rank two classification") {
  CHECK(classify_sl2({FieldElem(2), FieldElem(2), FieldElem(0)}) ==
        SL2LocusSet{SL2Locus::reducible_line});
  const auto ctx5 = sqrt_adjoin(Cyclo12(5));
  const FieldElem r5 = FieldElem::root_of(ctx5);
  CHECK(classify_sl2({FieldElem(2), FieldElem(2), r5}) ==
        SL2LocusSet{SL2Locus::reducible_line, SL2Locus::irreducible_curve});

  const auto ctx22 = sqrt_adjoin(Cyclo12(22));
  const FieldElem y0 = FieldElem::root_of(ctx22) * FieldElem(2).inverse();
  CHECK(y0 * y0 == FieldElem(make_rational(11, 2)));
  CHECK(classify_sl2({FieldElem(3), FieldElem(make_rational(3, 2)), y0}) ==
        SL2LocusSet{SL2Locus::irreducible_curve});

  CHECK(classify_pgl2(FieldElem(2), FieldElem(2), FieldElem(5)) ==
        SL2LocusSet{SL2Locus::reducible_line, SL2Locus::irreducible_curve});
  CHECK(classify_pgl2(FieldElem(2), FieldElem(2), FieldElem(0)) ==
        SL2LocusSet{SL2Locus::reducible_line});
  CHECK(classify_pgl2(FieldElem(3), FieldElem(make_rational(3, 2)),
                      FieldElem(make_rational(11, 2))) ==
        SL2LocusSet{SL2Locus::irreducible_curve});

  CHECK(classify_gl2({FieldElem(5), FieldElem(5), FieldElem(2)}) ==
        GL2LocusSet{GL2Locus::x2_curve, GL2Locus::xtr_gl2});
  CHECK(gl2_intersection({FieldElem(5), FieldElem(5), FieldElem(2)}));
  CHECK(classify_gl2({FieldElem(11), FieldElem(22), FieldElem(3)}) ==
        GL2LocusSet{GL2Locus::x2_curve});
  CHECK(classify_gl2({FieldElem(1), FieldElem(1), FieldElem(2)}) ==
        GL2LocusSet{GL2Locus::xtr_gl2});
  CHECK(classify_gl2({FieldElem(3), FieldElem(7), FieldElem(5)}).empty());
  CHECK_THROWS_AS(classify_gl2({FieldElem(1), FieldElem(0), FieldElem(3)}), arithmetic_error);
  CHECK_THROWS_AS(classify_gl2({FieldElem(1), FieldElem(2), FieldElem(1)}), arithmetic_error);
}

TEST_CASE("symmetric square bridge") {
  // The trivial representation maps to the trivial character.
  const SL2Rep triv(FMat2::identity(), FMat2::identity());
  const CharCoords tc = sym2_bridge(triv);
  for (const FieldElem& e : tc.tuple()) CHECK(e == FieldElem(3));

  // Reducible input: fiber traces collapse to 3, so the image is totally
  // reducible; the base point keeps track of s.
  const auto ctx5 = sqrt_adjoin(Cyclo12(5));
  const FieldElem golden = (FieldElem(1) + FieldElem::root_of(ctx5)) * FieldElem(2).inverse();
  const SL2Rep red = riley_rep(golden, FieldElem(0));
  const CharCoords rc3 = sym2_bridge(red);
  CHECK(rc3.alpha == FieldElem(3));
  CHECK(rc3.beta == FieldElem(3));
  CHECK(rc3.y == FieldElem(4));  // (s + 1/s)^2 - 1 = 5 - 1
  CHECK(classify(rc3).count(Component::XTR) == 1);
  // That character is the triple intersection point.
  CHECK(classify(rc3) == ComponentSet{Component::XTR, Component::XPR, Component::V0});

  // Parabolic input: the image satisfies the advertised trace relations and
  // lands in the distinguished component.
  const SL2Rep par = riley_rep(FieldElem(1), fe_w() + FieldElem(1));
  const SL2Coords pc = sl2_coords(par);
  const CharCoords p3 = sym2_bridge(par);
  CHECK(p3.alpha == pc.x1 * pc.x1 - FieldElem(1));
  CHECK(p3.alphabar == p3.alpha);
  CHECK(p3.beta == pc.x2 * pc.x2 - FieldElem(1));
  CHECK(p3.betabar == p3.beta);
  CHECK(p3.y == pc.y0 * pc.y0 - FieldElem(1));
  CHECK(classify(p3).count(Component::V0) == 1);
  CHECK(trace_identities_hold(p3));
  // The branch polynomial of the distinguished covering vanishes there.
  const auto& w0 = w_catalog(Component::V0);
  CHECK(w0.disc_factors[0].first.eval(coord_point(p3)).is_zero());

  // A generic irreducible point over a quadratic extension.
  const FieldElem s(3), s2(9);
  const FieldElem cns = s2 * s2 - FieldElem(3) * s2 + FieldElem(1);
  const UPoly quad = s2 * UPoly::x(2) + cns * UPoly::x(1) - cns * UPoly::x(0);
  const FieldElem disc = quadratic_discriminant(quad);
  const auto roots = quadratic_roots_in_field(quad, sqrt_adjoin(disc.base_part()));
  REQUIRE(roots.has_value());
  const SL2Rep rho = riley_rep(s, roots->first);
  const CharCoords c3 = sym2_bridge(rho);
  CHECK(classify(c3).count(Component::V0) == 1);
  CHECK(trace_identities_hold(c3));
  CHECK(w0.disc_factors[0].first.eval(coord_point(c3)).is_zero());
  REQUIRE(c3.eta.has_value());
  // eta satisfies its quadratic over the fiber-trace surface.
  const FieldElem P = w0.P.eval(coord_point(c3)), Q = w0.Q.eval(coord_point(c3));
  CHECK((*c3.eta * *c3.eta - P * *c3.eta + Q).is_zero());
}
