#include "frpoisson/rational_fn.hpp"

namespace frpoisson {

RationalFn::RationalFn(Poly numerator)
    : num_(std::move(numerator)), den_(Poly::constant(num_.vars(), Rat(1))) {}

RationalFn::RationalFn(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.vars() != den_.vars()) throw DomainError("varset", "mixed variable sets");
  if (den_.is_zero()) throw DomainError("rational_fn", "zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), Rat(1));
    return;
  }
  // Strip the shared monomial factor.
  Exponents cn = num_.monomial_content();
  Exponents cd = den_.monomial_content();
  Exponents shared(cn.size());
  bool any = false;
  for (std::size_t i = 0; i < cn.size(); ++i) {
    shared[i] = std::min(cn[i], cd[i]);
    any = any || shared[i] > 0;
  }
  if (any) {
    Poly factor = Poly::monomial(num_.vars(), shared, Rat(1));
    num_ = *num_.divided_exactly_by(factor);
    den_ = *den_.divided_exactly_by(factor);
  }
  // Scale so the denominator has coprime integer coefficients and a positive
  // leading coefficient.
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : den_.terms()) {
    Int g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    num_gcd = g;
    Int l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(den_.leading_term().second) < 0) scale = -scale;
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

bool RationalFn::is_polynomial() const { return den_.is_constant(); }

Poly RationalFn::as_poly() const {
  if (!is_polynomial()) throw DomainError("rational_fn", "value is not polynomial");
  return num_.scaled(Rat(1) / den_.constant_value());
}

RationalFn RationalFn::operator+(const RationalFn& other) const {
  return RationalFn(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFn RationalFn::operator-(const RationalFn& other) const { return *this + (-other); }

RationalFn RationalFn::operator-() const {
  RationalFn result = *this;
  result.num_ = -result.num_;
  return result;
}

RationalFn RationalFn::operator*(const RationalFn& other) const {
  return RationalFn(num_ * other.num_, den_ * other.den_);
}

RationalFn RationalFn::operator/(const RationalFn& other) const {
  if (other.is_zero()) throw DomainError("rational_fn", "division by zero");
  return RationalFn(num_ * other.den_, den_ * other.num_);
}

bool RationalFn::operator==(const RationalFn& other) const {
  return (num_ * other.den_) == (other.num_ * den_);
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) return as_poly().to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace frpoisson
