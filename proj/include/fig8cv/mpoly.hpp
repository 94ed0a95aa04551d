// Sparse multivariate polynomials over FieldElem, formal fractions without
// gcd normalization, and a quadratic extension s^2 = Delta of the fraction
// field.  Zero testing works by full expansion under a term-count budget;
// univariate resultants are Sylvester determinants.  This is the engine both
// for symbolic identity checking and for eliminating variables.

#pragma once

#include <cctype>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fig8cv/field.hpp"

namespace fig8cv {

struct poly_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an expansion would exceed the term budget.  Callers that want
// a verdict anyway fall back to sampled evaluation; see expand_is_zero.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t initial_term_budget() {
  if (const char* env = std::getenv("FIG8_TERM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

inline std::size_t& term_budget_ref() {
  thread_local std::size_t budget = initial_term_budget();
  return budget;
}

}  // namespace detail

inline std::size_t term_budget() { return detail::term_budget_ref(); }
inline void set_term_budget(std::size_t n) { detail::term_budget_ref() = n > 0 ? n : 1; }

// Keeps the current budget, installs a new one, restores on destruction.
class TermBudgetGuard {
 public:
  explicit TermBudgetGuard(std::size_t n) : saved_(term_budget()) { set_term_budget(n); }
  ~TermBudgetGuard() { set_term_budget(saved_); }
  TermBudgetGuard(const TermBudgetGuard&) = delete;
  TermBudgetGuard& operator=(const TermBudgetGuard&) = delete;

 private:
  std::size_t saved_;
};

// Global variable table.  The fixed prefix pins the canonical order used for
// printing; further names are appended on first use.  "i" is reserved for the
// imaginary unit of the coefficient grammar and is never a variable.
namespace detail {

inline std::vector<std::string>& var_table() {
  static std::vector<std::string> table = {
      "alpha", "alphabar", "beta", "betabar", "y",  "ybar", "z",    "zbar",
      "eta",   "v",        "w",    "x1",      "nu", "nubar", "zeta", "s"};
  return table;
}

inline bool valid_var_name(const std::string& name) {
  if (name.empty() || name == "i") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

}  // namespace detail

inline int lookup_var(const std::string& name) {
  const auto& table = detail::var_table();
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] == name) return static_cast<int>(k);
  }
  return -1;
}

inline int intern_var(const std::string& name) {
  if (!detail::valid_var_name(name)) throw poly_error("invalid variable name '" + name + "'");
  if (int k = lookup_var(name); k >= 0) return k;
  detail::var_table().push_back(name);
  return static_cast<int>(detail::var_table().size()) - 1;
}

inline const std::string& var_name(int index) {
  const auto& table = detail::var_table();
  if (index < 0 || index >= static_cast<int>(table.size())) {
    throw poly_error("variable index out of range");
  }
  return table[static_cast<std::size_t>(index)];
}

namespace detail {

// Exponent vectors are kept with trailing zeros trimmed, so each monomial has
// exactly one representation.  Term order: total degree descending, ties by
// lexicographic comparison with earlier variables more significant.
using Monomial = std::vector<unsigned>;

inline Monomial trim_monomial(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned ea = k < a.size() ? a[k] : 0;
      const unsigned eb = k < b.size() ? b[k] : 0;
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

}  // namespace detail

class MPoly {
 public:
  using Monomial = detail::Monomial;
  using TermMap = std::map<Monomial, FieldElem, detail::MonomialOrder>;

  MPoly() = default;
  explicit MPoly(const FieldElem& c) { add_term(Monomial{}, c); }
  explicit MPoly(long n) : MPoly(FieldElem(n)) {}

  static MPoly constant(const FieldElem& c) { return MPoly(c); }

  static MPoly var(const std::string& name, unsigned exp = 1) {
    const int idx = intern_var(name);
    if (exp == 0) return MPoly(FieldElem(1));
    Monomial m(static_cast<std::size_t>(idx) + 1, 0);
    m[static_cast<std::size_t>(idx)] = exp;
    MPoly p;
    p.terms_.emplace(std::move(m), FieldElem(1));
    return p;
  }

  static MPoly make_term(Monomial m, const FieldElem& c) {
    MPoly p;
    p.add_term(detail::trim_monomial(std::move(m)), c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  FieldElem constant_value() const {
    if (is_zero()) return FieldElem(0);
    if (!is_constant()) throw poly_error("polynomial is not constant");
    return terms_.begin()->second;
  }
  std::size_t n_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, detail::monomial_degree(m));
    return d;
  }

  int degree_in(const std::string& name) const {
    const int idx = lookup_var(name);
    if (idx < 0) return 0;
    const auto ui = static_cast<std::size_t>(idx);
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      if (ui < m.size()) d = std::max(d, m[ui]);
    }
    return static_cast<int>(d);
  }

  // Ascending coefficients of the polynomial viewed as univariate in `name`;
  // entry k is an MPoly in the remaining variables.
  std::vector<MPoly> coefficients_in(const std::string& name) const {
    const int idx = lookup_var(name);
    std::vector<MPoly> out(static_cast<std::size_t>(degree_in(name)) + 1);
    const auto ui = idx < 0 ? std::size_t(-1) : static_cast<std::size_t>(idx);
    for (const auto& [m, c] : terms_) {
      unsigned e = 0;
      Monomial rest = m;
      if (idx >= 0 && ui < rest.size()) {
        e = rest[ui];
        rest[ui] = 0;
      }
      out[e].add_term(detail::trim_monomial(std::move(rest)), c);
    }
    return out;
  }

  MPoly operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    check_size();
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    check_size();
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    const std::size_t budget = term_budget();
    if (!a.terms_.empty() && a.terms_.size() > budget / std::max<std::size_t>(b.terms_.size(), 1)) {
      throw budget_exceeded("product of " + std::to_string(a.terms_.size()) + " x " +
                            std::to_string(b.terms_.size()) + " terms exceeds budget");
    }
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
        for (std::size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
        r.add_term(std::move(m), ca * cb);
      }
      if (r.terms_.size() > budget) {
        throw budget_exceeded("expansion exceeds term budget of " + std::to_string(budget));
      }
    }
    return r;
  }

  friend MPoly operator*(const FieldElem& c, const MPoly& p) {
    MPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }
  friend MPoly operator*(const MPoly& p, const FieldElem& c) { return c * p; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(unsigned e) const {
    MPoly r(FieldElem(1));
    MPoly base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  FieldElem eval(const std::map<std::string, FieldElem>& point) const {
    std::vector<const FieldElem*> bound = bind(point);
    FieldElem acc(0);
    for (const auto& [m, c] : terms_) {
      FieldElem t = c;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (k >= bound.size() || bound[k] == nullptr) {
          throw poly_error("unbound variable '" + var_name(static_cast<int>(k)) + "'");
        }
        t = t * bound[k]->pow(static_cast<long>(m[k]));
      }
      acc = acc + t;
    }
    return acc;
  }

  // Generic substitution: variables take values in any commutative ring T
  // (with default-constructed zero), coefficients enter through `lift`.
  template <class T, class Lift>
  T eval_with(const std::map<std::string, T>& point, Lift&& lift) const {
    std::vector<const T*> bound;
    for (const auto& [name, value] : point) {
      const int idx = lookup_var(name);
      if (idx < 0) continue;
      if (static_cast<std::size_t>(idx) >= bound.size()) bound.resize(idx + 1, nullptr);
      bound[static_cast<std::size_t>(idx)] = &value;
    }
    T acc{};
    for (const auto& [m, c] : terms_) {
      T t = lift(c);
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (k >= bound.size() || bound[k] == nullptr) {
          throw poly_error("unbound variable '" + var_name(static_cast<int>(k)) + "'");
        }
        for (unsigned j = 0; j < m[k]; ++j) t = t * (*bound[k]);
      }
      acc = acc + t;
    }
    return acc;
  }

  void add_term(Monomial m, const FieldElem& c) {
    if (c.is_zero()) return;
    m = detail::trim_monomial(std::move(m));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

 private:
  void check_size() const {
    if (terms_.size() > term_budget()) {
      throw budget_exceeded("expansion exceeds term budget of " + std::to_string(term_budget()));
    }
  }

  std::vector<const FieldElem*> bind(const std::map<std::string, FieldElem>& point) const {
    std::vector<const FieldElem*> bound;
    for (const auto& [name, value] : point) {
      const int idx = lookup_var(name);
      if (idx < 0) continue;
      if (static_cast<std::size_t>(idx) >= bound.size()) bound.resize(idx + 1, nullptr);
      bound[static_cast<std::size_t>(idx)] = &value;
    }
    return bound;
  }

  TermMap terms_;
};

// Remainder of p on division by q in the variable `name`.  Requires the
// leading coefficient of q in that variable to be an invertible constant,
// which covers reduction modulo a monic quadratic relation such as the slice
// hypersurface in zeta.
inline MPoly reduce_mod(MPoly p, const MPoly& q, const std::string& name) {
  const int dq = q.degree_in(name);
  if (dq < 1) throw poly_error("reduction modulus must have positive degree in " + name);
  const auto qc = q.coefficients_in(name);
  if (!qc[static_cast<std::size_t>(dq)].is_constant()) {
    throw poly_error("reduction modulus must have constant leading coefficient in " + name);
  }
  const FieldElem lead_inv = qc[static_cast<std::size_t>(dq)].constant_value().inverse();
  for (int dp = p.degree_in(name); dp >= dq; dp = p.degree_in(name)) {
    const auto pc = p.coefficients_in(name);
    const MPoly factor = lead_inv * pc[static_cast<std::size_t>(dp)];
    const MPoly shift = MPoly::var(name, static_cast<unsigned>(dp - dq));
    p -= factor * shift * q;
  }
  return p;
}

// Sylvester resultant of p and q with respect to `name`, computed as the
// determinant of the Sylvester matrix by expansion over row subsets.
inline MPoly resultant_in(const MPoly& p, const MPoly& q, const std::string& name) {
  const int m = p.degree_in(name), n = q.degree_in(name);
  if (m < 1 || n < 1) throw poly_error("resultant arguments must have positive degree in " + name);
  const auto pc = p.coefficients_in(name);
  const auto qc = q.coefficients_in(name);
  const int size = m + n;
  if (size > 20) throw poly_error("resultant matrix too large");

  std::vector<std::vector<MPoly>> s(static_cast<std::size_t>(size),
                                    std::vector<MPoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s[i][i + k] = pc[static_cast<std::size_t>(m - k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = qc[static_cast<std::size_t>(n - k)];
  }

  std::unordered_map<std::uint32_t, MPoly> memo;
  const std::uint32_t full = (size >= 32) ? 0 : ((std::uint32_t{1} << size) - 1);
  auto det = [&](auto&& self, std::uint32_t used) -> MPoly {
    if (used == full) return MPoly(FieldElem(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    int col = 0;
    for (std::uint32_t u = used; u; u &= u - 1) ++col;
    MPoly acc;
    int parity = 0;
    for (int r = 0; r < size; ++r) {
      if (used & (std::uint32_t{1} << r)) continue;
      const MPoly& entry = s[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (!entry.is_zero()) {
        MPoly contrib = entry * self(self, used | (std::uint32_t{1} << r));
        acc += (parity % 2 == 0) ? contrib : -contrib;
      }
      ++parity;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(det, 0);
}

class RatFunc {
 public:
  RatFunc() : num_(), den_(FieldElem(1)) {}
  RatFunc(const MPoly& num) : num_(num), den_(MPoly(FieldElem(1))) {}
  RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw poly_error("zero denominator");
    fold_constant_den();
  }
  explicit RatFunc(const FieldElem& c) : RatFunc(MPoly(c)) {}

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_, unchecked{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw poly_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // Cross-multiplication equality; fractions are never gcd-reduced.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  FieldElem eval(const std::map<std::string, FieldElem>& point) const {
    const FieldElem d = den_.eval(point);
    if (d.is_zero()) throw poly_error("denominator vanishes at evaluation point");
    return num_.eval(point) * d.inverse();
  }

 private:
  struct unchecked {};
  RatFunc(MPoly num, MPoly den, unchecked) : num_(std::move(num)), den_(std::move(den)) {}

  void fold_constant_den() {
    if (den_.is_constant() && !(den_.constant_value() == FieldElem(1))) {
      num_ = den_.constant_value().inverse() * num_;
      den_ = MPoly(FieldElem(1));
    }
  }

  MPoly num_;
  MPoly den_;
};

// Element a + b*s of Frac(base)[s] / (s^2 - Delta).  The modulus is shared;
// a value with zero s-part and no modulus combines with any modulus, exactly
// like FieldElem handles its quadratic context.
class SqrtPoly {
 public:
  SqrtPoly() = default;
  SqrtPoly(const RatFunc& a) : a_(a) {}
  SqrtPoly(const MPoly& a) : a_(RatFunc(a)) {}
  SqrtPoly(RatFunc a, RatFunc b, const MPoly& delta)
      : a_(std::move(a)), b_(std::move(b)), delta_(std::make_shared<const MPoly>(delta)) {}

  static SqrtPoly constant(const FieldElem& c) { return SqrtPoly(RatFunc(c)); }
  static SqrtPoly radical(const MPoly& delta) {
    return SqrtPoly(RatFunc(), RatFunc(MPoly(FieldElem(1))), delta);
  }

  const RatFunc& base_part() const { return a_; }
  const RatFunc& sqrt_part() const { return b_; }
  const MPoly* modulus() const { return delta_.get(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  SqrtPoly operator-() const { return SqrtPoly(-a_, -b_, delta_); }

  friend SqrtPoly operator+(const SqrtPoly& x, const SqrtPoly& y) {
    return SqrtPoly(x.a_ + y.a_, x.b_ + y.b_, join(x, y));
  }
  friend SqrtPoly operator-(const SqrtPoly& x, const SqrtPoly& y) {
    return SqrtPoly(x.a_ - y.a_, x.b_ - y.b_, join(x, y));
  }
  friend SqrtPoly operator*(const SqrtPoly& x, const SqrtPoly& y) {
    auto delta = join(x, y);
    if (x.b_.is_zero() || y.b_.is_zero()) {
      return SqrtPoly(x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_, delta);
    }
    if (!delta) throw poly_error("product of radicals needs a modulus");
    const RatFunc d{*delta};
    return SqrtPoly(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, delta);
  }

  SqrtPoly conj() const { return SqrtPoly(a_, -b_, delta_); }

  SqrtPoly inverse() const {
    RatFunc n = a_ * a_;
    if (!b_.is_zero()) {
      if (!delta_) throw poly_error("radical without a modulus");
      n = n - b_ * b_ * RatFunc(*delta_);
    }
    if (n.is_zero()) throw poly_error("element is not invertible modulo s^2 - Delta");
    return SqrtPoly(a_ / n, -(b_ / n), delta_);
  }

  friend SqrtPoly operator/(const SqrtPoly& x, const SqrtPoly& y) { return x * y.inverse(); }

  SqrtPoly& operator+=(const SqrtPoly& o) { return *this = *this + o; }
  SqrtPoly& operator-=(const SqrtPoly& o) { return *this = *this - o; }
  SqrtPoly& operator*=(const SqrtPoly& o) { return *this = *this * o; }

  SqrtPoly pow(unsigned e) const {
    SqrtPoly r = constant(FieldElem(1));
    SqrtPoly base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  // The point must bind "s" to a square root of the modulus whenever the
  // s-part is present.
  FieldElem eval(const std::map<std::string, FieldElem>& point) const {
    const FieldElem va = a_.eval(point);
    if (b_.is_zero()) return va;
    auto it = point.find("s");
    if (it == point.end()) throw poly_error("point does not bind s");
    if (!delta_) throw poly_error("radical without a modulus");
    if (it->second * it->second != delta_->eval(point)) {
      throw poly_error("bound s is not a square root of the modulus at this point");
    }
    return va + b_.eval(point) * it->second;
  }

 private:
  SqrtPoly(RatFunc a, RatFunc b, std::shared_ptr<const MPoly> delta)
      : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {}

  static std::shared_ptr<const MPoly> join(const SqrtPoly& x, const SqrtPoly& y) {
    if (!x.delta_) return y.delta_;
    if (!y.delta_) return x.delta_;
    if (x.delta_ != y.delta_ && !(*x.delta_ == *y.delta_)) {
      throw poly_error("mixing radicals with different moduli");
    }
    return x.delta_;
  }

  RatFunc a_;
  RatFunc b_;
  std::shared_ptr<const MPoly> delta_;
};

enum class ZeroCheck { zero, nonzero, inconclusive };

inline ZeroCheck expand_is_zero(const MPoly& p) {
  return p.is_zero() ? ZeroCheck::zero : ZeroCheck::nonzero;
}
inline ZeroCheck expand_is_zero(const RatFunc& f) {
  return f.is_zero() ? ZeroCheck::zero : ZeroCheck::nonzero;
}
inline ZeroCheck expand_is_zero(const SqrtPoly& e) {
  return e.is_zero() ? ZeroCheck::zero : ZeroCheck::nonzero;
}

// Runs a deferred expansion under the current budget; a blown budget yields
// "inconclusive", never a verdict.
template <class F>
  requires std::invocable<F&>
inline ZeroCheck expand_is_zero(F&& build) {
  try {
    return expand_is_zero(build());
  } catch (const budget_exceeded&) {
    return ZeroCheck::inconclusive;
  }
}

// Canonical text form: terms in the monomial order, coefficients in the
// element grammar.  Within a term, bare identifiers are always variables and
// "i" is the imaginary unit, so coefficients outside Q(i) are parenthesized
// (and such strings are display-only; the parser does not accept them).
inline std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(static_cast<int>(k));
      if (m[k] > 1) mono += '^' + std::to_string(m[k]);
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

inline std::string to_string(const RatFunc& f) {
  if (f.den().is_constant() && f.den().constant_value() == FieldElem(1)) {
    return to_string(f.num());
  }
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::string to_string(const SqrtPoly& e) {
  if (e.sqrt_part().is_zero()) return to_string(e.base_part());
  std::string out = "(" + to_string(e.base_part()) + ")+(" + to_string(e.sqrt_part()) + ")*s";
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  MPoly parse() {
    skip_ws();
    if (eof()) throw parse_error("empty polynomial", 0);
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    MPoly acc = parse_term(neg);
    while (true) {
      skip_ws();
      if (eof()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw parse_error("expected '+' or '-'", pos_);
      ++pos_;
      acc += parse_term(c == '-');
    }
    return acc;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  MPoly parse_term(bool neg) {
    FieldElem coef(neg ? -1 : 1);
    MPoly::Monomial mono;
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = coef * FieldElem(parse_rational());
        skip_ws();
        if (peek() == '^') throw parse_error("exponent on a rational coefficient", pos_);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::string name = parse_ident();
        const unsigned exp = parse_exponent();
        if (name == "i") {
          coef = coef * fe_i().pow(static_cast<long>(exp % 4));
        } else {
          const auto idx = static_cast<std::size_t>(intern_var(name));
          if (idx >= mono.size()) mono.resize(idx + 1, 0);
          mono[idx] += exp;
        }
      } else {
        throw parse_error("expected a coefficient or variable", pos_);
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return MPoly::make_term(std::move(mono), coef);
  }

  Rational parse_rational() {
    const Integer num = parse_int();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const Integer den = parse_int();
      if (den == 0) throw parse_error("zero denominator", at);
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_int() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw parse_error("expected an integer", pos_);
    return Integer(s_.substr(start, pos_ - start));
  }

  std::string parse_ident() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return s_.substr(start, pos_ - start);
  }

  unsigned parse_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    const std::size_t at = pos_;
    const Integer e = parse_int();
    if (e <= 0 || e > 4096) throw parse_error("exponent out of range", at);
    return static_cast<unsigned>(e.get_ui());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const SqrtPoly& e) { return os << to_string(e); }

}  // namespace fig8cv
