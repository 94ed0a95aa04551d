// The rank-two layer: Fricke coordinates of SL2 characters of the knot group,
// classification of the SL2/PGL2/GL2 character varieties, a Riley-shaped
// representation constructor, and the symmetric-square bridge that carries an
// SL2 representation into the distinguished SL3 component.

#pragma once

#include "fig8cv/coords.hpp"

namespace fig8cv {

enum class SL2Locus { reducible_line, irreducible_curve };
using SL2LocusSet = std::set<SL2Locus>;

inline std::string to_string(SL2Locus l) {
  return l == SL2Locus::reducible_line ? "reducible-line" : "irreducible-curve";
}

struct SL2Coords {
  FieldElem x1, x2, y0;  // traces of a, b and t
};

inline SL2LocusSet classify_sl2(const SL2Coords& c) {
  SL2LocusSet out;
  const FieldElem one(1), two(2);
  if (c.x1 == two && c.x2 == two) out.insert(SL2Locus::reducible_line);
  if ((c.x1 - one) * (c.x2 - one) == one && c.y0 * c.y0 == c.x1 + c.x2 + one) {
    out.insert(SL2Locus::irreducible_curve);
  }
  return out;
}

// In the PGL2 picture the square z0 of the meridian trace is a coordinate.
inline SL2LocusSet classify_pgl2(const FieldElem& x1, const FieldElem& x2,
                                 const FieldElem& z0) {
  SL2LocusSet out;
  const FieldElem one(1), two(2);
  if (x1 == two && x2 == two) out.insert(SL2Locus::reducible_line);
  if ((x1 - one) * (x2 - one) == one && z0 == x1 + x2 + one) {
    out.insert(SL2Locus::irreducible_curve);
  }
  return out;
}

struct GL2Coords {
  FieldElem v, w, x1;  // trace and determinant of the meridian image, trace of a
};

enum class GL2Locus { x2_curve, xtr_gl2 };
using GL2LocusSet = std::set<GL2Locus>;

inline std::string to_string(GL2Locus l) {
  return l == GL2Locus::x2_curve ? "X2" : "XTR";
}

inline GL2LocusSet classify_gl2(const GL2Coords& c) {
  if (c.w.is_zero()) throw arithmetic_error("gl2 point needs a nonzero determinant");
  if (c.x1 == FieldElem(1)) throw arithmetic_error("the gl2 curve test is undefined at x1 = 1");
  GL2LocusSet out;
  const FieldElem curve =
      (c.x1 * c.x1 + c.x1 - FieldElem(1)) * (c.x1 - FieldElem(1)).inverse() * c.w;
  if (curve == c.v * c.v) out.insert(GL2Locus::x2_curve);
  if (c.x1 == FieldElem(2)) out.insert(GL2Locus::xtr_gl2);
  return out;
}

// The two loci meet where x1 = 2 and 5w = v^2.
inline bool gl2_intersection(const GL2Coords& c) {
  return classify_gl2(c) == GL2LocusSet{GL2Locus::x2_curve, GL2Locus::xtr_gl2};
}

// An SL2 representation of the knot group on the two-bridge generators.
class SL2Rep {
 public:
  SL2Rep(FMat2 s, FMat2 t) : s_(std::move(s)), t_(std::move(t)) {}

  const FMat2& s_image() const { return s_; }
  const FMat2& t_image() const { return t_; }

  FMat2 eval(const Word& w) const {
    const Word local = w.alphabet() == Alphabet::ST ? w : convert(w, Alphabet::ST);
    FMat2 r = FMat2::identity();
    for (int letter : local.letters()) {
      const FMat2& gen = std::abs(letter) == 1 ? s_ : t_;
      r = r * (letter > 0 ? gen : gen.inverse());
    }
    return r;
  }

  FieldElem trace_of(const Word& w) const { return eval(w).trace(); }

  bool check_relations() const {
    return eval(Word::parse(Alphabet::ST, "S.T'.S'.T.S")) ==
           eval(Word::parse(Alphabet::ST, "T.S.T'.S'.T"));
  }

 private:
  FMat2 s_, t_;
};

// Fricke coordinates of a representation: traces of the fiber generators and
// the meridian.
inline SL2Coords sl2_coords(const SL2Rep& rho) {
  if (!rho.check_relations()) throw relation_error("representation violates the group relation");
  return SL2Coords{rho.trace_of(Word::parse(Alphabet::ST, "T'.S.T.S'")),
                   rho.trace_of(Word::parse(Alphabet::ST, "T.S'")),
                   rho.trace_of(Word::parse(Alphabet::ST, "S"))};
}

// Both generators conjugate, one upper and one lower triangular, sharing the
// eigenvalue s.  The pair extends to the group exactly when the relation
// holds, which confines u to the roots of a quadratic; the constructor checks
// the relation directly instead of trusting a closed form.
inline SL2Rep riley_rep(const FieldElem& s, const FieldElem& u) {
  if (s.is_zero()) throw arithmetic_error("the riley eigenvalue must be nonzero");
  const FieldElem si = s.inverse(), zero(0), one(1);
  SL2Rep rho(FMat2(s, one, zero, si), FMat2(s, zero, u, si));
  if (!rho.check_relations()) {
    throw relation_error("the parameters (s, u) do not satisfy the group relation");
  }
  return rho;
}

// Compose with the symmetric square and read off the SL3 trace coordinates.
// The image lands in the distinguished component when the input is
// irreducible, and in the totally reducible one otherwise.
inline CharCoords sym2_bridge(const SL2Rep& rho) {
  if (!rho.check_relations()) throw relation_error("representation violates the group relation");
  const Representation lifted(Alphabet::ST, {sym2(rho.s_image()), sym2(rho.t_image())});
  return extract(lifted);
}

}  // namespace fig8cv
