#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fig8cv/words.hpp"

using namespace fig8cv;

namespace {

Word W(Alphabet a, const std::string& text) { return Word::parse(a, text); }

Word random_word(std::mt19937_64& rng, Alphabet a, int n_gens, int max_len = 12) {
  Word w(a);
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len)) + 1;
  for (int k = 0; k < len; ++k) {
    const int g = static_cast<int>(rng() % static_cast<unsigned>(n_gens)) + 1;
    w.append(rng() % 2 == 0 ? g : -g);
  }
  return w;
}

}  // namespace

TEST_CASE("word parsing, printing, and free reduction") {
  const Word w = W(Alphabet::ST, "T.S'");
  CHECK(to_string(w) == "T.S'");
  CHECK(w.length() == 2);

  CHECK(W(Alphabet::ST, "S.S'").empty());
  CHECK(W(Alphabet::TAB, "a.b.b'.a'").empty());
  CHECK(W(Alphabet::TAB, "a.b").inverse() == W(Alphabet::TAB, "b'.a'"));
  CHECK((W(Alphabet::TAB, "a.b") * W(Alphabet::TAB, "b'.a'")).empty());
  CHECK(to_string(Word(Alphabet::KL)) == "");

  CHECK_THROWS_AS(W(Alphabet::ST, "Q"), word_error);
  CHECK_THROWS_AS(W(Alphabet::ST, "S..T"), word_error);
  CHECK_THROWS_AS(W(Alphabet::ST, "S."), word_error);
  CHECK_THROWS_AS(W(Alphabet::ST, "t"), word_error);
  CHECK_THROWS_AS(W(Alphabet::TAB, "a") * W(Alphabet::ST, "S"), word_error);
}

TEST_CASE("conversion between the two knot-group presentations") {
  CHECK(convert(W(Alphabet::TAB, "b"), Alphabet::ST) == W(Alphabet::ST, "T.S'"));
  CHECK(convert(W(Alphabet::TAB, "t"), Alphabet::ST) == W(Alphabet::ST, "S"));
  CHECK(convert(W(Alphabet::TAB, "a"), Alphabet::ST) == W(Alphabet::ST, "T'.S.T.S'"));
  CHECK(convert(W(Alphabet::ST, "S"), Alphabet::TAB) == W(Alphabet::TAB, "t"));
  CHECK(convert(W(Alphabet::ST, "T"), Alphabet::TAB) == W(Alphabet::TAB, "b.t"));

  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Word w = random_word(rng, Alphabet::ST, 2);
    CHECK(convert(convert(w, Alphabet::TAB), Alphabet::ST) == w);
  }

  // The fiber generator a returns as t^-1 b^-1 t b, which equals a in the
  // group but not freely; representation-level tests confirm the identity.
  const Word round = convert(convert(W(Alphabet::TAB, "a"), Alphabet::ST), Alphabet::TAB);
  CHECK(round == W(Alphabet::TAB, "t'.b'.t.b"));

  CHECK_THROWS_AS(convert(W(Alphabet::KL, "k"), Alphabet::ST), word_error);
  CHECK_THROWS_AS(convert(W(Alphabet::ST, "S"), Alphabet::KL), word_error);
}

TEST_CASE("the symmetries f and h at word level") {
  const Word s = W(Alphabet::ST, "S"), t = W(Alphabet::ST, "T");
  CHECK(apply_automorphism(Symmetry::f, s) == W(Alphabet::ST, "T'"));
  CHECK(apply_automorphism(Symmetry::f, t) == W(Alphabet::ST, "S'"));
  CHECK(apply_automorphism(Symmetry::f, apply_automorphism(Symmetry::f, s)) == s);
  CHECK(apply_automorphism(Symmetry::f, apply_automorphism(Symmetry::f, t)) == t);

  const Word a_st = convert(W(Alphabet::TAB, "a"), Alphabet::ST);
  CHECK(apply_automorphism(Symmetry::f, a_st) == a_st.inverse());

  CHECK(apply_automorphism(Symmetry::h, s) == W(Alphabet::ST, "S.T'.S'"));
  CHECK(apply_automorphism(Symmetry::h, t) == W(Alphabet::ST, "T.S'.T'"));

  CHECK_THROWS_AS(apply_automorphism(Symmetry::f, W(Alphabet::KL, "k")), word_error);
}

TEST_CASE("the Dehn-filling morphism to the triangle group") {
  CHECK(dehn_phi(W(Alphabet::TAB, "b")) == W(Alphabet::KL, "k.l"));
  CHECK(dehn_phi(W(Alphabet::TAB, "t")) == W(Alphabet::KL, "k.l.k"));
  CHECK(dehn_phi(W(Alphabet::TAB, "a")) == W(Alphabet::KL, "k'.l'.k.l"));
  CHECK(dehn_phi(W(Alphabet::ST, "S")) == W(Alphabet::KL, "k.l.k"));
  CHECK(dehn_phi(W(Alphabet::ST, "T")) == W(Alphabet::KL, "k.l.k.l.k"));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Word u = random_word(rng, Alphabet::TAB, 3);
    const Word v = random_word(rng, Alphabet::TAB, 3);
    CHECK(dehn_phi(u * v) == dehn_phi(u) * dehn_phi(v));
    CHECK(dehn_phi(convert(u, Alphabet::ST)) == dehn_phi(u));
  }

  CHECK_THROWS_AS(dehn_phi(W(Alphabet::KL, "k")), word_error);
}

TEST_CASE("peripheral system words") {
  CHECK(meridian_word() == W(Alphabet::TAB, "t"));
  CHECK(meridian_word(Alphabet::ST) == W(Alphabet::ST, "S"));
  CHECK(longitude_word() == W(Alphabet::TAB, "a.b.a'.b'"));
  CHECK(longitude_word(Alphabet::ST) == W(Alphabet::ST, "T'.S.T.S'.S'.T.S.T'"));
}

TEST_CASE("representations evaluate words and check relations") {
  const FMat3 id = FMat3::identity();
  const Representation trivial(Alphabet::TAB, {id, id, id});
  CHECK(trivial.check_relations());

  const FMat3 central = FMat3::scalar_matrix(fe_w());
  const Representation center_rep(Alphabet::TAB, {central, id, id});
  CHECK(center_rep.check_relations());
  CHECK(center_rep.eval(W(Alphabet::TAB, "t.t.t")) == id);
  CHECK(center_rep.eval(W(Alphabet::TAB, "t.t'")) == id);
  CHECK(center_rep.trace_of(meridian_word()) == FieldElem(3) * fe_w());

  FMat3 diag_t;
  diag_t.at(0, 0) = FieldElem(2);
  diag_t.at(1, 1) = FieldElem(1);
  diag_t.at(2, 2) = FieldElem(1);
  FMat3 diag_a;
  diag_a.at(0, 0) = FieldElem(1);
  diag_a.at(1, 1) = FieldElem(2);
  diag_a.at(2, 2) = FieldElem(1);
  const Representation broken(Alphabet::TAB, {diag_t, diag_a, id});
  CHECK_FALSE(broken.check_relations());

  const Representation st_trivial(Alphabet::ST, {id, id});
  CHECK(st_trivial.check_relations());
  CHECK(st_trivial.eval(W(Alphabet::TAB, "a.b")) == id);

  const Representation kl_trivial(Alphabet::KL, {id, id});
  CHECK(kl_trivial.check_relations());
  const Representation kl_central(Alphabet::KL, {central, id});
  CHECK_FALSE(kl_central.check_relations());
}
