#ifndef FRPOISSON_RATIONAL_FN_HPP
#define FRPOISSON_RATIONAL_FN_HPP

#include <string>

#include "frpoisson/poly.hpp"

namespace frpoisson {

// Quotient of polynomials. Appears only where division by the volume factor k
// is forced (divergences, d log|k|); everything else stays polynomial.
//
// Normal form: the common monomial factor of numerator and denominator is
// removed, the denominator has coprime integer coefficients, and its leading
// coefficient is positive. General polynomial common factors are not
// cancelled (no factorization in the engine), which is harmless because
// equality and zero tests work by cross-multiplication.
class RationalFn {
 public:
  explicit RationalFn(Poly numerator);
  RationalFn(Poly numerator, Poly denominator);

  static RationalFn zero(const VarSet& vars) { return RationalFn(Poly::zero(vars)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;  // denominator is constant

  // Exact polynomial value when is_polynomial() holds.
  Poly as_poly() const;

  RationalFn operator+(const RationalFn& other) const;
  RationalFn operator-(const RationalFn& other) const;
  RationalFn operator-() const;
  RationalFn operator*(const RationalFn& other) const;
  RationalFn operator/(const RationalFn& other) const;

  bool operator==(const RationalFn& other) const;  // cross-multiplied equality
  bool operator!=(const RationalFn& other) const { return !(*this == other); }

  std::string to_string() const;  // "num" or "(num)/(den)"

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace frpoisson

#endif
