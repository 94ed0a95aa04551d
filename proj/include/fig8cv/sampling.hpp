// Deterministic random sampling for identity testing.  mt19937_64 output is
// specified by the standard, and values are derived by modulus rather than
// std::uniform_int_distribution, so reports are reproducible across builds.
#pragma once

#include <random>

#include "field.hpp"

namespace fig8cv {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  long below(long n) {  // uniform-ish in [0, n)
    return static_cast<long>(eng_() % static_cast<std::uint64_t>(n));
  }
  long in_range(long lo, long hi) { return lo + below(hi - lo + 1); }

  // Height-bounded rationals: numerator in [-20, 20], denominator in [1, 10].
  Rational rational() { return make_rational(in_range(-20, 20), in_range(1, 10)); }
  Rational nonzero_rational() {
    for (;;) {
      Rational q = rational();
      if (q != 0) return q;
    }
  }

  FieldElem field_rational() { return FieldElem(rational()); }
  // A random Gaussian-rational pair (p + qi, p - qi) with q != 0.
  std::pair<FieldElem, FieldElem> conjugate_pair() {
    const Rational p = rational();
    const Rational q = nonzero_rational();
    const Cyclo12 z = Cyclo12(p) + Cyclo12(q) * Cyclo12::imag_unit();
    return {FieldElem(z), FieldElem(z.conj())};
  }
  Cyclo12 cyclo() {
    return Cyclo12(rational(), rational(), rational(), rational());
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline constexpr int kRejectionCap = 1000;  // sampling retry bound at excluded loci

}  // namespace fig8cv
