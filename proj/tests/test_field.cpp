#include <catch2/catch_amalgamated.hpp>

#include "fig8cv/field.hpp"
#include "fig8cv/sampling.hpp"

using namespace fig8cv;

TEST_CASE("generator relations of the cyclotomic field") {
  const Cyclo12 g = Cyclo12::gen();
  CHECK(g * g * g * g == g * g - Cyclo12(1));
  Cyclo12 p(1);
  for (int k = 0; k < 12; ++k) p = p * g;
  CHECK(p == Cyclo12(1));
  const Cyclo12 i = Cyclo12::imag_unit();
  CHECK(i == g * g * g);
  CHECK(i * i == Cyclo12(-1));
  const Cyclo12 w = Cyclo12::omega();
  CHECK(w == g * g - Cyclo12(1));
  CHECK(w * w * w == Cyclo12(1));
  CHECK_FALSE(w == Cyclo12(1));
  CHECK(w * w + w + Cyclo12(1) == Cyclo12());
  CHECK(Cyclo12::zeta6() == Cyclo12(1) + w);
  CHECK(Cyclo12::zeta6() * Cyclo12::zeta6() == w);
  CHECK(Cyclo12::sqrt3() * Cyclo12::sqrt3() == Cyclo12(3));
}

TEST_CASE("complex conjugation is a field automorphism") {
  CHECK(Cyclo12::imag_unit().conj() == -Cyclo12::imag_unit());
  CHECK(Cyclo12::gen().conj() * Cyclo12::gen() == Cyclo12(1));
  CHECK(Cyclo12::omega().conj() == Cyclo12::omega() * Cyclo12::omega());
  Sampler s(17);
  for (int k = 0; k < 50; ++k) {
    const Cyclo12 x = s.cyclo(), y = s.cyclo();
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("display basis round-trips") {
  Sampler s(3);
  for (int k = 0; k < 50; ++k) {
    const Cyclo12 x = s.cyclo();
    const auto d = x.display();
    CHECK(Cyclo12::from_display(d.one, d.i, d.w, d.wi) == x);
  }
}

TEST_CASE("field axioms and inverses") {
  Sampler s(11);
  const auto ctx = sqrt_adjoin(Cyclo12(5));
  for (int k = 0; k < 100; ++k) {
    const FieldElem x(s.cyclo()), y(s.cyclo()), z(s.cyclo());
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) CHECK(x * x.inverse() == FieldElem(1));
  }
  for (int k = 0; k < 50; ++k) {
    const FieldElem x(s.cyclo(), s.cyclo(), ctx), y(s.cyclo(), s.cyclo(), ctx);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == FieldElem(1));
    CHECK((x - y) + y == x);
  }
}

TEST_CASE("square roots inside the cyclotomic field") {
  CHECK(cyclo_is_square(Cyclo12(3)));
  CHECK(cyclo_is_square(Cyclo12(-3)));
  CHECK(cyclo_is_square(Cyclo12(-1)));
  CHECK(cyclo_is_square(Cyclo12(12)));
  CHECK(cyclo_is_square(Cyclo12(-27)));
  CHECK(cyclo_is_square(Cyclo12::omega()));
  CHECK_FALSE(cyclo_is_square(Cyclo12(5)));
  CHECK_FALSE(cyclo_is_square(Cyclo12(2)));
  CHECK_FALSE(cyclo_is_square(Cyclo12(-2)));
  CHECK_FALSE(cyclo_is_square(Cyclo12::imag_unit()));
  const auto r = cyclo_sqrt(Cyclo12::omega());
  REQUIRE(r.has_value());
  CHECK(*r * *r == Cyclo12::omega());

  Sampler s(23);
  for (int k = 0; k < 60; ++k) {
    const Cyclo12 gamma = s.cyclo();
    const auto root = cyclo_sqrt(gamma * gamma);
    REQUIRE(root.has_value());
    CHECK(*root * *root == gamma * gamma);
  }
}

TEST_CASE("adjoining square roots") {
  const auto deg = sqrt_adjoin(Cyclo12(4));
  CHECK(deg->degenerate());
  CHECK(FieldElem::root_of(deg) == FieldElem(2));
  CHECK(FieldElem::root_of(deg, -1) == FieldElem(-2));

  const auto five = sqrt_adjoin(Cyclo12(5));
  CHECK_FALSE(five->degenerate());
  const FieldElem s5 = FieldElem::root_of(five);
  CHECK(s5 * s5 == FieldElem(5));
  CHECK_FALSE(s5.in_base_field());
  CHECK((s5 - s5).in_base_field());

  const auto seven = sqrt_adjoin(Cyclo12(7));
  const FieldElem h(Rational(1, 2));
  const FieldElem x = h + h * FieldElem::root_of(seven);
  CHECK(x * x == FieldElem(2) + h * FieldElem::root_of(seven));

  // A square inside the extension is recognized.
  const FieldElem y = FieldElem(1) + FieldElem::root_of(five);
  const auto yroot = (y * y).sqrt_in_field();
  REQUIRE(yroot.has_value());
  CHECK(*yroot * *yroot == y * y);
  CHECK_FALSE(FieldElem::root_of(five).sqrt_in_field().has_value());

  const auto m7 = sqrt_adjoin(Cyclo12(-7));
  const FieldElem sm7 = FieldElem::root_of(m7);
  CHECK(sm7 * sm7 == FieldElem(-7));

  CHECK_THROWS_AS(FieldElem::root_of(five) + FieldElem::root_of(seven), field_mismatch);
}

TEST_CASE("canonical printing and parsing") {
  CHECK(to_string(FieldElem()) == "0");
  CHECK(to_string(FieldElem(-7)) == "-7");
  CHECK(to_string(FieldElem(make_rational(2, 3))) == "2/3");
  CHECK(to_string(fe_i()) == "i");
  CHECK(to_string(-fe_i()) == "-i");
  CHECK(to_string(FieldElem(5) * fe_w()) == "5*w");
  CHECK(to_string(fe_w() * fe_i()) == "w*i");
  CHECK(to_string(fe_w() * fe_w()) == "-1-w");

  CHECK(parse_elem("i^2") == FieldElem(-1));
  CHECK(parse_elem("w^3") == FieldElem(1));
  CHECK(parse_elem(" 1 + 2 * i ") == FieldElem(1) + FieldElem(2) * fe_i());
  CHECK(parse_elem("-3/4*w*i") == FieldElem(make_rational(-3, 4)) * fe_w() * fe_i());

  const auto seven = sqrt_adjoin(Cyclo12(7));
  const FieldElem x = parse_elem("1/2+1/2*s", seven);
  CHECK(to_string(x) == "1/2+1/2*s");
  CHECK(to_string(x * x) == "2+1/2*s");
  CHECK(parse_elem("s^2", seven) == FieldElem(7));

  CHECK_THROWS_AS(parse_elem("1+"), parse_error);
  CHECK_THROWS_AS(parse_elem("q"), parse_error);
  CHECK_THROWS_AS(parse_elem("3//4"), parse_error);
  CHECK_THROWS_AS(parse_elem("1/0"), parse_error);
  CHECK_THROWS_AS(parse_elem("s"), parse_error);       // no declared square root
  CHECK_THROWS_AS(parse_elem("i^0"), parse_error);
  CHECK_THROWS_AS(parse_elem(""), parse_error);
  CHECK_THROWS_AS(parse_elem("2**i"), parse_error);

  SECTION("round trip on random elements") {
    Sampler s(41);
    const auto ctx = sqrt_adjoin(Cyclo12(-7));
    for (int k = 0; k < 80; ++k) {
      const FieldElem e(s.cyclo(), s.cyclo(), ctx);
      CHECK(parse_elem(to_string(e), ctx) == e);
      const FieldElem b(s.cyclo());
      CHECK(parse_elem(to_string(b)) == b);
    }
  }
}

TEST_CASE("powers") {
  const FieldElem z = FieldElem(1) + fe_i();
  CHECK(z.pow(4) == FieldElem(-4));
  CHECK(z.pow(-1) * z == FieldElem(1));
  CHECK(fe_w().pow(3) == FieldElem(1));
}
