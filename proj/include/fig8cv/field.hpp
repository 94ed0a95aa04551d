// The working coefficient field: Q(zeta12), optionally extended by one square
// root s with s^2 = D for a chosen D in Q(zeta12).
//
// A FieldElem is a + b*s.  Elements always live at the lowest level of the
// tower that contains them: b == 0 forces the extension tag to be dropped, so
// equality, printing and is_rational are canonical.  Adjoining a D that is
// already a square in Q(zeta12) yields a degenerate context whose "root" is a
// plain field element; values never carry such a context.
#pragma once

#include <memory>
#include <string>

#include "cyclo12.hpp"

namespace fig8cv {

struct parse_error : std::runtime_error {
  size_t position;
  parse_error(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct field_mismatch : arithmetic_error {
  using arithmetic_error::arithmetic_error;
};

struct SqrtCtx {
  Cyclo12 D;
  std::optional<Cyclo12> collapsed_root;  // set when D is already a square
  bool degenerate() const { return collapsed_root.has_value(); }
};
using SqrtCtxPtr = std::shared_ptr<const SqrtCtx>;

inline SqrtCtxPtr sqrt_adjoin(const Cyclo12& D) {
  return std::make_shared<const SqrtCtx>(SqrtCtx{D, cyclo_sqrt(D)});
}

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long n) : a_(n) {}
  FieldElem(const Rational& q) : a_(q) {}
  FieldElem(const Cyclo12& c) : a_(c) {}
  FieldElem(Cyclo12 a, Cyclo12 b, SqrtCtxPtr ctx) : a_(std::move(a)), b_(std::move(b)), ext_(std::move(ctx)) {
    if (ext_ && ext_->degenerate()) {
      a_ += b_ * *ext_->collapsed_root;
      b_ = Cyclo12();
      ext_.reset();
    }
    normalize();
  }

  // The adjoined root (or its negative), collapsed when D was a square.
  static FieldElem root_of(const SqrtCtxPtr& ctx, int branch = +1) {
    if (!ctx) throw arithmetic_error("root_of: null context");
    if (ctx->degenerate()) {
      const Cyclo12 r = *ctx->collapsed_root;
      return FieldElem(branch >= 0 ? r : -r);
    }
    return FieldElem(Cyclo12(), Cyclo12(branch >= 0 ? 1 : -1), ctx);
  }

  const Cyclo12& base_part() const { return a_; }
  const Cyclo12& sqrt_part() const { return b_; }
  const SqrtCtxPtr& ctx() const { return ext_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base_field() const { return !ext_; }
  bool is_rational() const { return !ext_ && a_.is_rational(); }
  const Rational& rational_value() const {
    if (ext_) throw arithmetic_error("element is not rational");
    return a_.rational_value();
  }

  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    if (x.ext_ && y.ext_) check_same(x.ext_, y.ext_);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

  FieldElem operator-() const { return FieldElem(-a_, -b_, ext_); }

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a_ + y.a_, x.b_ + y.b_, join(x, y));
  }
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a_ - y.a_, x.b_ - y.b_, join(x, y));
  }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    const SqrtCtxPtr ctx = join(x, y);
    if (!ctx) return FieldElem(x.a_ * y.a_);
    return FieldElem(x.a_ * y.a_ + x.b_ * y.b_ * ctx->D, x.a_ * y.b_ + x.b_ * y.a_, ctx);
  }

  FieldElem inverse() const {
    if (is_zero()) throw arithmetic_error("division by zero");
    if (!ext_) return FieldElem(a_.inverse());
    // The norm a^2 - b^2 D vanishes only at zero since D is not a square.
    const Cyclo12 n = a_ * a_ - b_ * b_ * ext_->D;
    const Cyclo12 ninv = n.inverse();
    return FieldElem(a_ * ninv, -b_ * ninv, ext_);
  }
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }

  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }
  FieldElem& operator/=(const FieldElem& y) { return *this = *this / y; }

  FieldElem pow(long e) const {
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElem r(1);
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // Exact square root within the current field, when one exists.
  std::optional<FieldElem> sqrt_in_field() const {
    if (!ext_) {
      if (auto r = cyclo_sqrt(a_)) return FieldElem(*r);
      return std::nullopt;
    }
    // gamma = x + y*s: x^2 + y^2 D = a, 2xy = b; x^2 and y^2 D are the roots
    // of X^2 - a X + D b^2 / 4, so their difference squares to a^2 - b^2 D.
    const Cyclo12 D = ext_->D;
    if (b_.is_zero()) {
      if (auto x = cyclo_sqrt(a_)) return FieldElem(*x);
      if (auto y = cyclo_sqrt(a_ / D)) return FieldElem(Cyclo12(), *y, ext_);
      return std::nullopt;
    }
    const auto disc = cyclo_sqrt(a_ * a_ - b_ * b_ * D);
    if (!disc) return std::nullopt;
    for (int sg = 0; sg < 2; ++sg) {
      const Cyclo12 cand = (a_ + (sg ? -*disc : *disc)) / Cyclo12(2);
      if (auto x = cyclo_sqrt(cand); x && !x->is_zero()) {
        const Cyclo12 y = b_ / (Cyclo12(2) * *x);
        return FieldElem(*x, y, ext_);
      }
    }
    return std::nullopt;
  }

 private:
  void normalize() {
    if (ext_ && b_.is_zero()) ext_.reset();
  }
  static void check_same(const SqrtCtxPtr& x, const SqrtCtxPtr& y) {
    if (x.get() == y.get()) return;
    if (!(x->D == y->D))
      throw field_mismatch("mixing elements of distinct quadratic extensions");
  }
  static SqrtCtxPtr join(const FieldElem& x, const FieldElem& y) {
    if (x.ext_ && y.ext_) {
      check_same(x.ext_, y.ext_);
      return x.ext_;
    }
    return x.ext_ ? x.ext_ : y.ext_;
  }

  Cyclo12 a_, b_;
  SqrtCtxPtr ext_;
};

inline FieldElem fe_i() { return FieldElem(Cyclo12::imag_unit()); }
inline FieldElem fe_w() { return FieldElem(Cyclo12::omega()); }

// Square root of e taken inside Q(zeta12)(sqrt D) for the given context.
// Elements with zero sqrt-part drop their context marker on normalization, so
// a caller that knows the ambient field passes it explicitly here.
inline std::optional<FieldElem> sqrt_in(const FieldElem& e, const SqrtCtxPtr& ctx) {
  if (auto r = e.sqrt_in_field()) return r;
  if (ctx && !ctx->degenerate() && e.in_base_field()) {
    if (auto y = cyclo_sqrt(e.base_part() / ctx->D)) return FieldElem(Cyclo12(), *y, ctx);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text form.  Grammar:
//   elem := ('-')? term (('+'|'-') term)*
//   term := coef ('*' sym)* | sym ('*' sym)*
//   coef := int ('/' posint)?
//   sym  := ('i' | 'w' | 's') ('^' posint)?
// Canonical printing orders terms as rational, i, w, w*i, then the same for
// the square-root part, with signs folded into the separators.
// ---------------------------------------------------------------------------

namespace detail {

inline void print_term(std::string& out, const Rational& coef, const char* sym) {
  if (coef == 0) return;
  const bool neg = coef < 0;
  Rational mag = neg ? Rational(-coef) : coef;
  if (out.empty()) {
    if (neg) out += '-';
  } else {
    out += neg ? '-' : '+';
  }
  if (*sym == '\0') {
    out += to_string(mag);
  } else if (mag == 1) {
    out += sym;
  } else {
    out += to_string(mag);
    out += '*';
    out += sym;
  }
}

}  // namespace detail

inline std::string to_string(const FieldElem& e) {
  static const char* base_syms[4] = {"", "i", "w", "w*i"};
  static const char* root_syms[4] = {"s", "i*s", "w*s", "w*i*s"};
  std::string out;
  const auto da = e.base_part().display();
  const Rational base_slots[4] = {da.one, da.i, da.w, da.wi};
  for (int k = 0; k < 4; ++k) detail::print_term(out, base_slots[k], base_syms[k]);
  const auto db = e.sqrt_part().display();
  const Rational root_slots[4] = {db.one, db.i, db.w, db.wi};
  for (int k = 0; k < 4; ++k) detail::print_term(out, root_slots[k], root_syms[k]);
  if (out.empty()) out = "0";
  return out;
}

namespace detail {

class ElemParser {
 public:
  ElemParser(const std::string& text, SqrtCtxPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

  FieldElem parse() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    } else if (peek() == '+') {
      ++pos_;
      skip_ws();
    }
    FieldElem total = parse_term();
    if (neg) total = -total;
    skip_ws();
    while (pos_ < text_.size()) {
      const char op = peek();
      if (op != '+' && op != '-') throw parse_error("expected '+' or '-'", pos_);
      ++pos_;
      skip_ws();
      const FieldElem t = parse_term();
      total = (op == '+') ? total + t : total - t;
      skip_ws();
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_sym() const {
    const char c = peek();
    return c == 'i' || c == 'w' || c == 's';
  }

  FieldElem parse_term() {
    skip_ws();
    FieldElem value(1);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = FieldElem(parse_coef());
      saw_factor = true;
    } else if (at_sym()) {
      value = parse_sym();
      saw_factor = true;
    }
    if (!saw_factor) throw parse_error("expected coefficient or symbol", pos_);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      if (!at_sym()) throw parse_error("expected symbol after '*'", pos_);
      value *= parse_sym();
      skip_ws();
    }
    return value;
  }

  Rational parse_coef() {
    const Integer num = parse_int();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const size_t at = pos_;
      const Integer den = parse_int();
      if (den <= 0) throw parse_error("denominator must be positive", at);
      return make_rational(num, den);
    }
    return make_rational(num, Integer(1));
  }

  Integer parse_int() {
    const size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw parse_error("expected integer", start);
    return Integer(text_.substr(start, pos_ - start));
  }

  FieldElem parse_sym() {
    const char c = peek();
    const size_t at = pos_;
    ++pos_;
    long exp = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const Integer e = parse_int();
      if (e <= 0 || e > 64) throw parse_error("exponent out of range", at);
      exp = e.get_si();
    }
    FieldElem base;
    switch (c) {
      case 'i': base = fe_i(); break;
      case 'w': base = fe_w(); break;
      case 's':
        if (!ctx_) throw parse_error("symbol 's' requires a declared square root", at);
        base = FieldElem::root_of(ctx_);
        break;
      default: throw parse_error("unknown symbol", at);
    }
    return base.pow(exp);
  }

  const std::string& text_;
  SqrtCtxPtr ctx_;
  size_t pos_ = 0;
};

}  // namespace detail

inline FieldElem parse_elem(const std::string& text, SqrtCtxPtr ctx = nullptr) {
  return detail::ElemParser(text, std::move(ctx)).parse();
}

inline std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << to_string(e); }

}  // namespace fig8cv
