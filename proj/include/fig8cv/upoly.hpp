// Univariate polynomials with FieldElem coefficients: division, monic gcd,
// and root extraction for degrees one and two.  Used to intersect the cubics
// whose common root recovers the parameter of a partially reducible point.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fig8cv/mpoly.hpp"

namespace fig8cv {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(const FieldElem& c) : c_{c} { trim(); }

  static UPoly x(unsigned k = 1) {
    std::vector<FieldElem> c(k + 1, FieldElem(0));
    c[k] = FieldElem(1);
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  FieldElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FieldElem(0); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FieldElem lead() const {
    if (is_zero()) throw poly_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
  }

  FieldElem eval(const FieldElem& x) const {
    FieldElem acc(0);
    for (std::size_t k = c_.size(); k > 0; --k) acc = acc * x + c_[k - 1];
    return acc;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<FieldElem> c(std::max(a.c_.size(), b.c_.size()), FieldElem(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<FieldElem> c(a.c_.size() + b.c_.size() - 1, FieldElem(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }

  friend UPoly operator*(const FieldElem& s, const UPoly& p) {
    UPoly r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (a.c_[k] != b.c_[k]) return false;
    }
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw poly_error("division by the zero polynomial");
    UPoly r = a;
    std::vector<FieldElem> q(
        a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
        FieldElem(0));
    const FieldElem lead_inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      const FieldElem f = r.lead() * lead_inv;
      q[shift] = f;
      for (std::size_t k = 0; k < b.c_.size(); ++k) {
        r.c_[shift + k] = r.c_[shift + k] - f * b.c_[k];
      }
      r.trim();
    }
    return {UPoly(std::move(q)), r};
  }

  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<FieldElem> c_;
};

inline UPoly gcd_univar(UPoly a, UPoly b) {
  if (a.is_zero() && b.is_zero()) throw poly_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline std::optional<FieldElem> linear_root(const UPoly& p) {
  if (p.degree() != 1) return std::nullopt;
  return -(p.coeff(0) * p.coeff(1).inverse());
}

// Roots of a quadratic when its discriminant is a square in the ambient
// field; callers that may extend the field inspect the discriminant first.
inline std::optional<std::pair<FieldElem, FieldElem>> quadratic_roots_in_field(
    const UPoly& p, const SqrtCtxPtr& ctx = nullptr) {
  if (p.degree() != 2) return std::nullopt;
  const FieldElem a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  const FieldElem disc = b * b - FieldElem(4) * a * c;
  const auto r = sqrt_in(disc, ctx);
  if (!r) return std::nullopt;
  const FieldElem half = FieldElem(2) * a;
  return std::make_pair((-b + *r) * half.inverse(), (-b - *r) * half.inverse());
}

inline FieldElem quadratic_discriminant(const UPoly& p) {
  if (p.degree() != 2) throw poly_error("discriminant of a non-quadratic");
  return p.coeff(1) * p.coeff(1) - FieldElem(4) * p.coeff(2) * p.coeff(0);
}

// Specializes all variables except `name`, yielding a univariate polynomial.
inline UPoly specialize(const MPoly& p, const std::string& name,
                        const std::map<std::string, FieldElem>& point) {
  const auto coeffs = p.coefficients_in(name);
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back(q.eval(point));
  return UPoly(std::move(c));
}

inline std::string to_string(const UPoly& p, const std::string& name = "w") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const FieldElem c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    std::string mono;
    if (k > 0) {
      mono = name;
      if (k > 1) mono += '^' + std::to_string(k);
    }
    const std::string cs = to_string(c);
    std::string piece;
    if (mono.empty()) {
      piece = cs;
    } else if (cs == "1") {
      piece = mono;
    } else if (cs == "-1") {
      piece = "-" + mono;
    } else if (cs.find_first_of("+-", 1) != std::string::npos ||
               cs.find_first_of("ws") != std::string::npos) {
      piece = "(" + cs + ")*" + mono;
    } else {
      piece = cs + "*" + mono;
    }
    if (out.empty() || piece[0] == '-') {
      out += piece;
    } else {
      out += '+' + piece;
    }
  }
  return out;
}

}  // namespace fig8cv
