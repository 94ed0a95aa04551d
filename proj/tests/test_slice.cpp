#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fig8cv/components.hpp"
#include "fig8cv/constructors.hpp"
#include "fig8cv/sampling.hpp"

using namespace fig8cv;

namespace {

FieldElem fe(long n, long d = 1) { return FieldElem(make_rational(n, d)); }

bool same_slice(const SlicePoint& a, const SlicePoint& b) {
  return a.x0 == b.x0 && a.x1 == b.x1 && a.y0 == b.y0 && a.y1 == b.y1;
}

bool same_w(const WPoint& a, const WPoint& b) {
  return a.nu == b.nu && a.nubar == b.nubar && a.zeta == b.zeta;
}

// The slice points over a random (x0, y0): the first surface equation gives
// y1 = x0 y0 + x1 - 2, the second becomes a quadratic in x1 whose
// discriminant root is adjoined when it is not already a square.
std::vector<SlicePoint> solve_slice_points(const FieldElem& x0, const FieldElem& y0) {
  const FieldElem one(1), two(2);
  const FieldElem a = x0 * y0 - two;
  const FieldElem b = x0 + one;
  const UPoly q(std::vector<FieldElem>{x0 + y0 + two - a * b, a - b, one});
  auto roots = quadratic_roots_in_field(q);
  if (!roots) {
    const FieldElem disc = quadratic_discriminant(q);
    if (disc.is_zero() || !disc.in_base_field()) return {};
    roots = quadratic_roots_in_field(q, sqrt_adjoin(disc.base_part()));
  }
  if (!roots) return {};
  std::vector<SlicePoint> out;
  for (const FieldElem& x1 : {roots->first, roots->second}) {
    out.push_back(SlicePoint{x0, x1, y0, a + x1});
  }
  return out;
}

// The hypersurface points over a random (nu, nubar), by solving the defining
// quadratic in zeta.
std::vector<WPoint> solve_w_points(const FieldElem& nu, const FieldElem& nubar) {
  const FieldElem one(1), two(2), five(5);
  const UPoly q(std::vector<FieldElem>{
      nu.pow(3) + nubar.pow(3) - five * nu * nubar + five, two - nu * nubar, one});
  auto roots = quadratic_roots_in_field(q);
  if (!roots) {
    const FieldElem disc = quadratic_discriminant(q);
    if (disc.is_zero() || !disc.in_base_field()) return {};
    roots = quadratic_roots_in_field(q, sqrt_adjoin(disc.base_part()));
  }
  if (!roots) return {};
  return {WPoint{nu, nubar, roots->first}, WPoint{nu, nubar, roots->second}};
}

// Both section denominators are nonzero, so slice_g is defined at q.  The six
// exceptional lines lie inside the union of the two denominator loci.
bool section_defined(const WPoint& q) {
  const FieldElem one(1), three(3);
  return !(q.zeta - one).is_zero() && !(q.zeta + three - q.nu * q.nubar).is_zero();
}

MPoly mpow(const MPoly& p, unsigned e) {
  MPoly r(FieldElem(1));
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

// Normal form modulo the surface ideal: the first generator eliminates y1,
// its reduction of the second is quadratic in x1 with unit leading term.
MPoly reduce_slice(MPoly p) {
  static const MPoly i1 = slice_ideal()[0];
  static const MPoly i2 = reduce_mod(slice_ideal()[1], i1, "y1");
  p = reduce_mod(std::move(p), i1, "y1");
  return reduce_mod(std::move(p), i2, "x1");
}

struct FractionImage {
  MPoly num;
  unsigned dx, dy;  // the result stands for num / (d1^dx d2^dy)
};

// Substitutes the four section components top[k] / d into a polynomial in
// the slice coordinates and clears denominators; x0 and x1 sit over d1, y0
// and y1 over d2.
FractionImage fraction_compose(const MPoly& p, const std::array<MPoly, 4>& top,
                               const MPoly& d1, const MPoly& d2) {
  static const std::array<std::string, 4> names = {"x0", "x1", "y0", "y1"};
  const auto slot_of = [](int var) -> std::size_t {
    const std::string n = var_name(var);
    const auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw poly_error("unexpected variable " + n);
    return static_cast<std::size_t>(it - names.begin());
  };
  unsigned a = 0, b = 0;
  for (const auto& [mono, coef] : p.terms()) {
    unsigned mx = 0, my = 0;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      (slot_of(static_cast<int>(k)) < 2 ? mx : my) += mono[k];
    }
    a = std::max(a, mx);
    b = std::max(b, my);
  }
  MPoly acc;
  for (const auto& [mono, coef] : p.terms()) {
    MPoly term(coef);
    unsigned mx = 0, my = 0;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      const std::size_t s = slot_of(static_cast<int>(k));
      (s < 2 ? mx : my) += mono[k];
      term = term * mpow(top[s], mono[k]);
    }
    acc += term * mpow(d1, a - mx) * mpow(d2, b - my);
  }
  return FractionImage{acc, a, b};
}

// The longitude trace of a filled character solves the covering quadratic
// over its fiber parameters.
void check_eta_quadratic(const CharCoords& c, Component id) {
  REQUIRE(c.eta.has_value());
  const std::map<std::string, FieldElem> params =
      id == Component::V2
          ? std::map<std::string, FieldElem>{{"alpha", c.alpha}, {"alphabar", c.alphabar}}
          : std::map<std::string, FieldElem>{{"beta", c.beta}, {"betabar", c.betabar}};
  const auto& wc = w_catalog(id);
  const FieldElem pv = wc.P.eval(params), qv = wc.Q.eval(params);
  CHECK((*c.eta * *c.eta - pv * *c.eta + qv).is_zero());
}

const std::array<FieldElem, 4> kOrderFourCharpoly = {fe(-1), fe(1), fe(-1), fe(1)};

}  // namespace

TEST_CASE("triangle slice representations") {
  const FieldElem one(1), i = fe_i();

  SECTION("hypersurface fixtures") {
    CHECK(on_w(WPoint{fe(2), fe(2), fe(1)}));
    CHECK_FALSE(on_w(WPoint{fe(1), fe(1), fe(1)}));
    const auto ctx = sqrt_adjoin(Cyclo12(-7));
    const FieldElem s = FieldElem::root_of(ctx);
    const FieldElem zp = (fe(7) + s) * fe(1, 2), zm = (fe(7) - s) * fe(1, 2);
    CHECK(on_w(WPoint{fe(3), fe(3), zp}));
    CHECK(on_w(WPoint{fe(3), fe(3), zm}));
    CHECK((zp * zp - fe(7) * zp + fe(14)).is_zero());
  }

  SECTION("a point of the surface and its representation") {
    const SlicePoint p{i, one, -one - i, -i};
    REQUIRE(on_slice(p));
    const Representation rho = slice_rep(p);
    CHECK(rho.check_relations());
    const FMat3 kl = rho.eval(Word::parse(Alphabet::KL, "k.l"));
    CHECK(kl.trace() == one);
    CHECK(kl.inverse().trace() == one);
    CHECK(charpoly(kl) == kOrderFourCharpoly);
  }

  SECTION("off-surface points are rejected") {
    const SlicePoint bad{one, one, one, one};
    CHECK_FALSE(on_slice(bad));
    CHECK_THROWS_WITH(slice_rep(bad), "the point is off the slice surface");
    CHECK_THROWS_WITH(slice_f(bad), "the point is off the slice surface");
  }

  SECTION("sampled points satisfy the triangle relations") {
    Sampler rng(106);
    int accepted = 0;
    while (accepted < 50) {
      for (const SlicePoint& p : solve_slice_points(rng.rational(), rng.rational())) {
        REQUIRE(on_slice(p));
        const Representation rho = slice_rep(p);
        REQUIRE(rho.check_relations());
        const FMat3 kl = rho.eval(Word::parse(Alphabet::KL, "k.l"));
        CHECK(kl.trace() == one);
        CHECK(kl.inverse().trace() == one);
        CHECK(charpoly(kl) == kOrderFourCharpoly);
        ++accepted;
      }
    }
  }
}

TEST_CASE("order four from the trace relations alone") {
  const MPoly zero, one(FieldElem(1));
  const MPoly x0 = MPoly::var("x0"), x1 = MPoly::var("x1");
  const MPoly y0 = MPoly::var("y0"), y1 = MPoly::var("y1");
  const Mat3<MPoly> k(zero, zero, one, x0, one, x1, -one, zero, -one);
  const Mat3<MPoly> l(one, y0, y1, zero, -one, -one, zero, one, zero);
  const Mat3<MPoly> id = Mat3<MPoly>::identity();

  SECTION("the generators have order three identically") {
    CHECK(k * k * k == id);
    CHECK(l * l * l == id);
  }

  SECTION("the product satisfies t^3 - t^2 + t - 1 on the surface") {
    const Mat3<MPoly> m = k * l;
    const auto cp = charpoly(m);
    CHECK((cp[0] + one).is_zero());
    CHECK(reduce_slice(cp[1] - one).is_zero());
    CHECK(reduce_slice(cp[2] + one).is_zero());
    CHECK((cp[3] - one).is_zero());
  }

  SECTION("the charpoly divides t^4 - 1") {
    const UPoly t = UPoly::x();
    const UPoly cp = (t - UPoly(fe(1))) * (UPoly::x(2) + UPoly(fe(1)));
    CHECK(cp == UPoly(std::vector<FieldElem>{fe(-1), fe(1), fe(-1), fe(1)}));
    CHECK(cp * (t + UPoly(fe(1))) == UPoly::x(4) - UPoly(fe(1)));
  }

  SECTION("the fourth power is the identity on the surface") {
    const Mat3<MPoly> m = k * l;
    const Mat3<MPoly> m2 = m * m;
    const Mat3<MPoly> m4 = m2 * m2;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        CHECK(reduce_slice(m4.at(r, c) - id.at(r, c)).is_zero());
      }
    }
  }
}

TEST_CASE("trace coordinates and the rational section") {
  const FieldElem one(1), i = fe_i();

  SECTION("the displayed values at nu = nubar = 0") {
    const SlicePoint p{i, one, -one - i, -i};
    const WPoint q = slice_f(p);
    CHECK(q.nu.is_zero());
    CHECK(q.nubar.is_zero());
    CHECK(q.zeta == fe(-1) + fe(2) * i);
    CHECK(on_w(q));
    CHECK(y_locus_components(q).empty());
    CHECK(same_slice(slice_g(q), p));
  }

  SECTION("the two points over nu = nubar = 3") {
    const auto ctx = sqrt_adjoin(Cyclo12(-7));
    const FieldElem s = FieldElem::root_of(ctx);
    const FieldElem half = fe(1, 2);
    const FieldElem zp = (fe(7) + s) * half, zm = (fe(7) - s) * half;
    const SlicePoint pp = slice_g(WPoint{fe(3), fe(3), zp});
    const SlicePoint pm = slice_g(WPoint{fe(3), fe(3), zm});
    CHECK(same_slice(pp, SlicePoint{(fe(3) - s) * half, one, (fe(1) + s) * half,
                                    (fe(3) + s) * half}));
    CHECK(same_slice(pm, SlicePoint{(fe(3) + s) * half, one, (fe(1) - s) * half,
                                    (fe(3) - s) * half}));
    CHECK(on_slice(pp));
    CHECK(on_slice(pm));
    CHECK(same_w(slice_f(pp), WPoint{fe(3), fe(3), zp}));
    CHECK(same_w(slice_f(pm), WPoint{fe(3), fe(3), zm}));
  }

  SECTION("the section refuses the exceptional lines") {
    CHECK_THROWS_WITH(slice_g(WPoint{fe(1), fe(1), fe(1)}),
                      "the point is off the trace hypersurface");
    REQUIRE(on_w(WPoint{fe(2), fe(2), fe(1)}));
    CHECK(y_locus_components(WPoint{fe(2), fe(2), fe(1)}) == std::set<int>{2, 3, 5, 6});
    CHECK_THROWS_WITH(slice_g(WPoint{fe(2), fe(2), fe(1)}),
                      "the section is undefined where zeta - 1 vanishes");
    REQUIRE(on_w(WPoint{fe(-1), fe(-1), fe(-2)}));
    CHECK(y_locus_components(WPoint{fe(-1), fe(-1), fe(-2)}) == std::set<int>{4});
    CHECK_THROWS_WITH(slice_g(WPoint{fe(-1), fe(-1), fe(-2)}),
                      "the section is undefined where nu nubar - zeta - 3 vanishes");
  }

  SECTION("section then trace map is the identity") {
    Sampler rng(107);
    int accepted = 0;
    while (accepted < 50) {
      for (const WPoint& q : solve_w_points(rng.rational(), rng.rational())) {
        if (!section_defined(q)) continue;
        const SlicePoint p = slice_g(q);
        REQUIRE(on_slice(p));
        CHECK(same_w(slice_f(p), q));
        ++accepted;
      }
    }
  }

  SECTION("trace map then section is the identity") {
    Sampler rng(108);
    int accepted = 0;
    while (accepted < 50) {
      for (const SlicePoint& p : solve_slice_points(rng.rational(), rng.rational())) {
        const WPoint q = slice_f(p);
        if (!section_defined(q)) continue;
        CHECK(same_slice(slice_g(q), p));
        ++accepted;
      }
    }
  }
}

TEST_CASE("the section and the trace map are symbolically inverse") {
  const MPoly d1 = parse_poly("zeta - 1");
  const MPoly d2 = parse_poly("zeta + 3 - nu*nubar");
  const std::array<MPoly, 4> top = {
      parse_poly("nu^2 + nu*nubar - 2*nubar - zeta - 3"),
      parse_poly("nu^2 - nubar^2 + 2*nu - 2*nubar + zeta - 1"),
      parse_poly("nu*nubar - nubar^2 + 2*nu - 2*zeta - 2"),
      parse_poly("-nu^2 + 2*nubar - zeta + 1")};
  const auto lift = [](const FieldElem& c) { return MPoly(c); };
  const std::map<std::string, MPoly> trace_map = {{"nu", slice_f_polys()[0]},
                                                  {"nubar", slice_f_polys()[1]},
                                                  {"zeta", slice_f_polys()[2]}};

  SECTION("the section components solve the displayed formulas") {
    const auto ctx = sqrt_adjoin(Cyclo12(-7));
    const FieldElem s = FieldElem::root_of(ctx);
    const WPoint q{fe(3), fe(3), (fe(7) + s) * fe(1, 2)};
    const SlicePoint p = slice_g(q);
    const auto at = w_point(q);
    CHECK(p.x0 * d1.eval(at) == top[0].eval(at));
    CHECK(p.x1 * d1.eval(at) == top[1].eval(at));
    CHECK(p.y0 * d2.eval(at) == top[2].eval(at));
    CHECK(p.y1 * d2.eval(at) == top[3].eval(at));
  }

  SECTION("trace map after section, modulo the hypersurface") {
    const std::array<std::string, 3> targets = {"nu", "nubar", "zeta"};
    for (std::size_t k = 0; k < 3; ++k) {
      const FractionImage img = fraction_compose(slice_f_polys()[k], top, d1, d2);
      const MPoly delta =
          img.num - MPoly::var(targets[k]) * mpow(d1, img.dx) * mpow(d2, img.dy);
      CHECK(reduce_mod(delta, w_hypersurface(), "zeta").is_zero());
    }
  }

  SECTION("the section lands on the surface, modulo the hypersurface") {
    for (const MPoly& gen : slice_ideal()) {
      const FractionImage img = fraction_compose(gen, top, d1, d2);
      CHECK(reduce_mod(img.num, w_hypersurface(), "zeta").is_zero());
    }
  }

  SECTION("section after trace map, modulo the surface ideal") {
    const std::array<std::string, 4> targets = {"x0", "x1", "y0", "y1"};
    for (std::size_t k = 0; k < 4; ++k) {
      const MPoly num = top[k].eval_with<MPoly>(trace_map, lift);
      const MPoly den = (k < 2 ? d1 : d2).eval_with<MPoly>(trace_map, lift);
      CHECK(reduce_slice(num - MPoly::var(targets[k]) * den).is_zero());
    }
  }

  SECTION("the trace map lands on the hypersurface") {
    CHECK(reduce_slice(w_hypersurface().eval_with<MPoly>(trace_map, lift)).is_zero());
  }
}

TEST_CASE("filled knot group representations") {
  const FieldElem one(1), i = fe_i();

  SECTION("only the two family targets fill") {
    const SlicePoint p{i, one, -one - i, -i};
    CHECK_THROWS_WITH(dehn_rep(p, Component::XTR),
                      "filling characters land on the V1 or V2 family");
    CHECK_THROWS_WITH(dehn_rep(p, Component::V0),
                      "filling characters land on the V1 or V2 family");
  }

  SECTION("an asymmetric point fills onto both families") {
    const WPoint q{fe(2), fe(1), fe(2) * i};
    REQUIRE(on_w(q));
    const SlicePoint p = slice_g(q);

    const Representation rho2 = dehn_rep(p, Component::V2);
    REQUIRE(rho2.check_relations());
    const CharCoords c2 = extract(rho2);
    CHECK(c2.y == fe(2));
    CHECK(c2.ybar == fe(1));
    CHECK(c2.alphabar == fe(2) * i);
    CHECK(c2.alpha == fe(-2) * i);
    CHECK(c2.beta == one);
    CHECK(c2.betabar == one);
    CHECK(classify(c2).count(Component::V2) == 1);
    check_eta_quadratic(c2, Component::V2);

    const Representation rho1 = dehn_rep(p, Component::V1);
    REQUIRE(rho1.check_relations());
    const CharCoords c1 = extract(rho1);
    CHECK(c1.y == fe(1));
    CHECK(c1.ybar == fe(2));
    CHECK(c1.betabar == fe(2) * i);
    CHECK(c1.beta == fe(-2) * i);
    CHECK(c1.alpha == one);
    CHECK(c1.alphabar == one);
    CHECK(classify(c1).count(Component::V1) == 1);
    check_eta_quadratic(c1, Component::V1);

    CHECK(sym_h(c2).tuple() == c1.tuple());
    CHECK(classify(sym_h(c2)).count(Component::V1) == 1);
  }

  SECTION("sampled fillings carry the slice coordinates as traces") {
    Sampler rng(109);
    int accepted = 0;
    while (accepted < 15) {
      for (const WPoint& q : solve_w_points(rng.rational(), rng.rational())) {
        if (!section_defined(q)) continue;
        const SlicePoint p = slice_g(q);
        const FieldElem other = q.nu * q.nubar - fe(2) - q.zeta;

        const CharCoords c2 = extract(dehn_rep(p, Component::V2));
        CHECK(c2.y == q.nu);
        CHECK(c2.ybar == q.nubar);
        CHECK(c2.alphabar == q.zeta);
        CHECK(c2.alpha == other);
        CHECK(c2.beta == one);
        CHECK(c2.betabar == one);
        CHECK(classify(c2).count(Component::V2) == 1);
        check_eta_quadratic(c2, Component::V2);

        const CharCoords c1 = extract(dehn_rep(p, Component::V1));
        CHECK(c1.y == q.nubar);
        CHECK(c1.ybar == q.nu);
        CHECK(c1.betabar == q.zeta);
        CHECK(c1.beta == other);
        CHECK(c1.alpha == one);
        CHECK(c1.alphabar == one);
        CHECK(classify(c1).count(Component::V1) == 1);
        check_eta_quadratic(c1, Component::V1);

        CHECK(sym_h(c2).tuple() == c1.tuple());
        ++accepted;
      }
    }
  }

  SECTION("the worked example at nu = nubar = 3") {
    const auto ctx = sqrt_adjoin(Cyclo12(-7));
    const FieldElem s = FieldElem::root_of(ctx);
    const auto half_of = [&s](long a, long b) { return (fe(a) + fe(b) * s) * fe(1, 2); };
    const FieldElem zp = half_of(7, 1), zm = half_of(7, -1);
    const SlicePoint p = slice_g(WPoint{fe(3), fe(3), zp});

    const Representation rho2 = dehn_rep(p, Component::V2);
    const CharCoords c2 = extract(rho2);
    CHECK(c2.y == fe(3));
    CHECK(c2.ybar == fe(3));
    CHECK(c2.alpha == zm);
    CHECK(c2.alphabar == zp);
    CHECK(c2.beta == one);
    CHECK(c2.betabar == one);

    const FMat3 disp_s(half_of(3, 1), one, one,
                       half_of(5, 1), half_of(5, -1), one,
                       half_of(-5, -1), half_of(-3, 1), -one);
    const FMat3 disp_t(half_of(5, 1), half_of(5, -1), one,
                       one, half_of(3, -1), one,
                       half_of(-3, -1), half_of(-5, 1), -one);
    const Representation disp(Alphabet::ST, {disp_s, disp_t});
    REQUIRE(disp.check_relations());
    CHECK(extract(disp) == c2);

    const FMat3 disp_ell(fe(-2) + fe(3) * s, half_of(9, 3), half_of(3, 3),
                         fe(15) + fe(3) * s, fe(10) - fe(3) * s, fe(9),
                         half_of(-15, -3), half_of(-9, 3), fe(-5));
    CHECK(disp.eval(longitude_word()).inverse() == disp_ell);
    const std::array<FieldElem, 4> unipotent = {fe(-1), fe(3), fe(-3), fe(1)};
    CHECK(charpoly(disp_ell) == unipotent);
    const FMat3 n = disp_ell - FMat3::identity();
    CHECK_FALSE(n.is_zero());
    CHECK((n * n * n).is_zero());

    const Representation rho1 = dehn_rep(p, Component::V1);
    const CharCoords c1 = extract(rho1);
    CHECK(c1.y == fe(3));
    CHECK(c1.ybar == fe(3));
    CHECK(c1.alpha == one);
    CHECK(c1.alphabar == one);
    CHECK(c1.beta + c1.betabar == fe(7));
    CHECK(c1.beta * c1.betabar == fe(14));
    CHECK(c1.betabar == zp);
    CHECK(classify(c1).count(Component::V1) == 1);
    REQUIRE(c1.eta.has_value());
    CHECK(*c1.eta == fe(3));
    const FMat3 ell = rho1.eval(longitude_word());
    CHECK(charpoly(ell) == unipotent);
    CHECK(((ell - FMat3::identity()) * (ell - FMat3::identity()) *
           (ell - FMat3::identity()))
              .is_zero());
  }
}
