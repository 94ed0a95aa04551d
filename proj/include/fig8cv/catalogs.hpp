// Equation catalogs: the polynomial systems cutting out the closed components
// of the character variety in the eight trace coordinates, and the quadratic
// data (P, Q, discriminant factorization) of the double coverings over the
// fiber-trace surfaces.  The catalogs are shipped as text files under
// data/catalogs/ and embedded here verbatim, so the two copies can be checked
// against each other byte for byte.

#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "fig8cv/coords.hpp"

namespace fig8cv {

struct EquationCatalog {
  Component id;
  std::vector<MPoly> polys;
  std::vector<std::string> notes;  // role of each polynomial, from the file comments
};

namespace detail {

// Raw literals start with a newline for readability; the file content does not.
inline const char* skip_leading_newline(const char* s) { return *s == '\n' ? s + 1 : s; }

inline const char* xtr_catalog_text = R"CAT(
# Totally reducible characters.
# All four fiber traces equal 3.
alpha-3
alphabar-3
beta-3
betabar-3
# The length-two traces are symmetric functions of the diagonal characters.
-y^2+2*ybar+z
-ybar^2+2*y+zbar
)CAT";

inline const char* v1_catalog_text = R"CAT(
# The irreducible component on which both commutator traces equal 1.
alpha-1
alphabar-1
# Fiber-trace relations cutting out the base surface.
y*ybar-beta-betabar-2
y^3+ybar^3-beta*betabar-5*beta-5*betabar-5
# The length-two traces coincide with the conjugate length-one traces.
-ybar+z
-y+zbar
)CAT";

inline const char* v2_catalog_text = R"CAT(
# The irreducible component on which both traces of b and its inverse equal 1.
beta-1
betabar-1
# Fiber-trace relations cutting out the base surface.
y*ybar-alpha-alphabar-2
y^3+ybar^3-alpha*alphabar-5*alpha-5*alphabar-5
# The length-two traces are quadratic in the length-one traces.
-y^2+ybar+z
-ybar^2+y+zbar
)CAT";

inline const char* v0_catalog_text = R"CAT(
# The distinguished component.  Its vanishing ideal is radical; the
# generators below are written with the identifications alpha = alphabar and
# beta = betabar, which hold on the whole component.
alpha-alphabar
beta-betabar
# Radical generators in (y, ybar, z, zbar, alpha, beta).
alpha^2-6*alpha*beta+2*y*z+2*ybar*zbar-z*zbar-6*alpha-1
-alpha*beta+y*ybar-alpha-beta-1
2*alpha^2*beta+alpha^2-z*zbar+1
alpha*beta*ybar+alpha*ybar-beta*z+y^2-y*zbar-z
alpha*beta*y+alpha*y-beta*zbar+ybar^2-ybar*z-zbar
-alpha^2*ybar+alpha*y*zbar+3*alpha*ybar-alpha*z-zbar^2-z
-alpha^2*y+alpha*ybar*z+3*alpha*y-alpha*zbar-z^2-zbar
alpha*ybar^2+alpha*y-alpha*zbar-ybar*z+y-zbar
alpha*y^2+alpha*ybar-alpha*z-y*zbar+ybar-z
2*alpha^2*y+alpha^2*zbar-2*alpha*beta*zbar+2*ybar*zbar^2-z*zbar^2-8*alpha*y-2*alpha*zbar-4*ybar*z+4*z^2+6*y-zbar
-alpha^2*ybar-2*alpha*beta*z+ybar*z*zbar+4*alpha*ybar-2*alpha*z+2*y*zbar-2*zbar^2-3*ybar
ybar^2*zbar+2*alpha*ybar-2*beta*z+3*y^2-2*y*zbar-zbar^2-2*ybar-2*z
-2*beta*z*zbar+4*y^2*zbar+4*ybar^2*z-alpha^2-16*alpha*beta-7*z*zbar-8*alpha-6*beta+3
alpha*beta^2-beta*ybar*zbar+y^2*zbar+ybar^3-2*alpha*beta-ybar*zbar-z*zbar-alpha-2*beta
-4*alpha*beta^2+2*beta*ybar*zbar+2*y^3-2*y^2*zbar+alpha^2-8*alpha*beta+2*ybar*zbar+z*zbar-4*alpha-2*beta-3
2*alpha*beta*z*zbar-alpha^3+alpha*z*zbar-4*y*zbar^2-4*ybar*z^2+4*alpha^2+18*alpha*beta+8*z*zbar+11*alpha-12
alpha^4-2*alpha^2*z*zbar+z^2*zbar^2-8*alpha^3-4*z^3-4*zbar^3+18*alpha^2+18*z*zbar-27
-2*beta*z*zbar^2+4*y^2*zbar^2-alpha^2*zbar+8*beta*z^2-3*z*zbar^2+16*alpha*y-30*beta*zbar+36*ybar^2-32*ybar*z+4*z^2-29*zbar
)CAT";

}  // namespace detail

inline const std::string& catalog_text(Component id) {
  static const std::map<Component, std::string> texts = {
      {Component::XTR, detail::skip_leading_newline(detail::xtr_catalog_text)},
      {Component::V0, detail::skip_leading_newline(detail::v0_catalog_text)},
      {Component::V1, detail::skip_leading_newline(detail::v1_catalog_text)},
      {Component::V2, detail::skip_leading_newline(detail::v2_catalog_text)},
  };
  const auto it = texts.find(id);
  if (it == texts.end()) {
    throw poly_error("component " + to_string(id) + " has no equation catalog");
  }
  return it->second;
}

// One polynomial per line; `#` lines describe the polynomials that follow.
inline EquationCatalog parse_catalog(Component id, const std::string& text) {
  EquationCatalog cat;
  cat.id = id;
  std::istringstream in(text);
  std::string line, note;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string stripped = line.substr(1);
      if (!stripped.empty() && stripped[0] == ' ') stripped.erase(0, 1);
      note += note.empty() ? stripped : " " + stripped;
      continue;
    }
    cat.polys.push_back(parse_poly(line));
    cat.notes.push_back(note);
    note.clear();
  }
  return cat;
}

inline const EquationCatalog& catalog(Component id) {
  static const std::map<Component, EquationCatalog> cache = [] {
    std::map<Component, EquationCatalog> m;
    for (Component id : {Component::XTR, Component::V0, Component::V1, Component::V2}) {
      m.emplace(id, parse_catalog(id, catalog_text(id)));
    }
    return m;
  }();
  const auto it = cache.find(id);
  if (it == cache.end()) {
    throw poly_error("component " + to_string(id) + " has no equation catalog");
  }
  return it->second;
}

// The double covering data over the fiber-trace surfaces: on each component
// the commutator trace of the fiber satisfies eta^2 - P eta + Q = 0, and the
// branch locus P^2 - 4Q factors as shown.
struct WCatalog {
  Component id;
  MPoly P, Q;
  std::vector<std::pair<MPoly, unsigned>> disc_factors;

  MPoly discriminant() const { return P * P - MPoly(FieldElem(4)) * Q; }

  MPoly factored_discriminant() const {
    MPoly r(FieldElem(1));
    for (const auto& [f, mult] : disc_factors) {
      for (unsigned k = 0; k < mult; ++k) r = r * f;
    }
    return r;
  }
};

inline const WCatalog& w_catalog(Component id) {
  static const std::map<Component, WCatalog> cache = [] {
    std::map<Component, WCatalog> m;
    m.emplace(Component::V0,
              WCatalog{Component::V0,
                       parse_poly("alpha^2*beta^2-2*alpha^2*beta-2*alpha*beta^2"
                                  "+2*alpha^2+2*beta^2-3"),
                       parse_poly("alpha^4*beta^2+alpha^2*beta^4-2*alpha^4*beta"
                                  "-4*alpha^3*beta^2-4*alpha^2*beta^3-2*alpha*beta^4"
                                  "+alpha^4+2*alpha^3*beta+12*alpha^2*beta^2"
                                  "+2*alpha*beta^3+beta^4+4*alpha^3+4*beta^3"
                                  "-12*alpha^2-12*beta^2+9"),
                       {{parse_poly("alpha^2*beta^2-6*alpha*beta-4*alpha-4*beta-3"), 1},
                        {parse_poly("alpha*beta-2*alpha-2*beta+3"), 2}}});
    m.emplace(Component::V1,
              WCatalog{Component::V1, parse_poly("beta*betabar-beta-betabar-1"),
                       parse_poly("beta^3+betabar^3-3*beta*betabar+2"),
                       {{parse_poly("beta^2*betabar^2-4*beta^3-2*beta^2*betabar"
                                    "-2*beta*betabar^2-4*betabar^3+beta^2"
                                    "+12*beta*betabar+betabar^2+2*beta+2*betabar-7"),
                         1}}});
    m.emplace(Component::V2,
              WCatalog{Component::V2, parse_poly("alpha*alphabar-alpha-alphabar-1"),
                       parse_poly("alpha^3+alphabar^3-3*alpha*alphabar+2"),
                       {{parse_poly("alpha^2*alphabar^2-4*alpha^3-2*alpha^2*alphabar"
                                    "-2*alpha*alphabar^2-4*alphabar^3+alpha^2"
                                    "+12*alpha*alphabar+alphabar^2+2*alpha+2*alphabar-7"),
                         1}}});
    return m;
  }();
  const auto it = cache.find(id);
  if (it == cache.end()) {
    throw poly_error("component " + to_string(id) + " has no covering data");
  }
  return it->second;
}

}  // namespace fig8cv
