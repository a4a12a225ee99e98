#ifndef FRPOISSON_MULTIVECTOR_HPP
#define FRPOISSON_MULTIVECTOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frpoisson/poly.hpp"
#include "frpoisson/rational_fn.hpp"

namespace frpoisson {

// Exterior algebra with Poly coefficients over a fixed VarSet.
//
// Sign conventions, fixed here once and inherited by every other module:
//  * terms are stored on ascending basis subsets; all signs live in the
//    coefficients.
//  * the Schouten-Nijenhuis bracket treats a p-vector field as a polynomial
//    in odd symbols z_i (z_i ~ d/dx_i, anticommuting among themselves) and is
//      [A,B] = sum_i dA/dx_i ^ dL B/dz_i - sum_i dR A/dz_i ^ dB/dx_i,
//    the negative of the BV antibracket (dL/dR = left/right z-derivative).
//    Under this convention [A,B] = -(-1)^((|A|-1)(|B|-1))[B,A], the graded
//    Jacobi identity holds, [X, f] = -X(f), the bracket restricts to MINUS
//    the Lie bracket on vector fields, d_pi(f) = [pi, f] = -X_f, and the
//    anchor chain rule reads pibar(d eta) = -[pi, pibar(eta)]. The opposite
//    global sign would restore [X, f] = +X(f) but break the chain rule; the
//    chain rule is the convention every downstream computation relies on.
//  * the pairing of ascending blades is <dx^S, d_T> = delta_{S,T}.

using Mask = std::uint32_t;

inline int mask_grade(Mask m) { return std::popcount(m); }

// Ascending-index-tuple lexicographic order on basis subsets.
struct MaskLess {
  bool operator()(Mask a, Mask b) const {
    while (a != 0 || b != 0) {
      const int la = a == 0 ? 1 << 30 : std::countr_zero(a);
      const int lb = b == 0 ? 1 << 30 : std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  }
};

std::vector<std::size_t> mask_indices(Mask m);
Mask mask_from_indices(const std::vector<std::size_t>& indices, std::size_t n);

// Sign produced by sorting the concatenation of two disjoint ascending
// blades; 0 when the masks intersect.
int merge_sign(Mask a, Mask b);

struct PartialsBasis {
  static std::string token(const std::string& var) { return "d/d" + var; }
};
struct FormsBasis {
  static std::string token(const std::string& var) { return "d" + var; }
};

template <typename BasisTag>
class Blade {
 public:
  using CompMap = std::map<Mask, Poly, MaskLess>;

  Blade(VarSet vars, int grade) : vars_(std::move(vars)), grade_(grade) {
    if (grade_ < 0 || grade_ > static_cast<int>(vars_.size())) {
      throw DomainError("blade", "grade out of range");
    }
  }

  static Blade zero(const VarSet& vars, int grade) { return Blade(vars, grade); }

  static Blade from_function(const Poly& f) {
    Blade b(f.vars(), 0);
    b.add_term(0, f);
    return b;
  }

  // Single basis element with coefficient, indices ascending.
  static Blade basis_element(const VarSet& vars, const std::vector<std::size_t>& indices,
                             const Poly& coef) {
    Blade b(vars, static_cast<int>(indices.size()));
    b.add_term(mask_from_indices(indices, vars.size()), coef);
    return b;
  }

  const VarSet& vars() const { return vars_; }
  int grade() const { return grade_; }
  const CompMap& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Poly coefficient(Mask m) const {
    auto it = comps_.find(m);
    return it == comps_.end() ? Poly::zero(vars_) : it->second;
  }

  void add_term(Mask m, const Poly& coef) {
    if (coef.is_zero()) return;
    if (mask_grade(m) != grade_) throw DomainError("blade", "component grade mismatch");
    if (coef.vars() != vars_) throw DomainError("varset", "mixed variable sets");
    auto it = comps_.find(m);
    if (it == comps_.end()) {
      comps_.emplace(m, coef);
    } else {
      it->second += coef;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  Blade operator+(const Blade& other) const {
    if (vars_ != other.vars_) throw DomainError("varset", "mixed variable sets");
    // The zero blade is grade-agnostic.
    if (is_zero() && grade_ != other.grade_) return other;
    if (other.is_zero() && grade_ != other.grade_) return *this;
    require_same_shape(other);
    Blade result = *this;
    for (const auto& [m, c] : other.comps_) result.add_term(m, c);
    return result;
  }

  Blade operator-(const Blade& other) const { return *this + other.scaled(Rat(-1)); }

  Blade scaled(const Rat& c) const {
    Blade result(vars_, grade_);
    if (frpoisson::is_zero(c)) return result;
    for (const auto& [m, coef] : comps_) result.comps_.emplace(m, coef.scaled(c));
    return result;
  }

  Blade scaled(const Poly& p) const {
    Blade result(vars_, grade_);
    for (const auto& [m, coef] : comps_) result.add_term(m, coef * p);
    return result;
  }

  bool operator==(const Blade& other) const {
    return vars_ == other.vars_ && grade_ == other.grade_ && comps_ == other.comps_;
  }
  bool operator!=(const Blade& other) const { return !(*this == other); }

  // Coefficient-wise partial derivative (the even derivative d/dx_i).
  Blade coefficient_derivative(std::size_t var) const {
    Blade result(vars_, grade_);
    for (const auto& [m, c] : comps_) result.add_term(m, c.derivative(var));
    return result;
  }

  // Left odd derivative d/dz_i: drops grade by one.
  Blade odd_derivative(std::size_t var) const {
    if (grade_ == 0) return Blade(vars_, 0);
    Blade result(vars_, grade_ - 1);
    const Mask bit = Mask(1) << var;
    for (const auto& [m, c] : comps_) {
      if (!(m & bit)) continue;
      const int below = std::popcount(m & (bit - 1));
      result.add_term(m & ~bit, below % 2 == 0 ? c : -c);
    }
    return result;
  }

  std::string to_string() const {
    if (comps_.empty()) return "0";
    if (grade_ == 0) return comps_.begin()->second.to_string();
    std::string out;
    for (const auto& [m, c] : comps_) {
      std::string factors;
      for (std::size_t i : mask_indices(m)) {
        if (!factors.empty()) factors += "^";
        factors += BasisTag::token(vars_.name(i));
      }
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + factors;
    }
    return out;
  }

 private:
  void require_same_shape(const Blade& other) const {
    if (vars_ != other.vars_) throw DomainError("varset", "mixed variable sets");
    if (grade_ != other.grade_) throw DomainError("blade", "grade mismatch");
  }

  VarSet vars_;
  int grade_;
  CompMap comps_;
};

using Multivector = Blade<PartialsBasis>;
using DiffForm = Blade<FormsBasis>;

// Graded-anticommutative wedge; raises on grade overflow.
template <typename BasisTag>
Blade<BasisTag> wedge(const Blade<BasisTag>& a, const Blade<BasisTag>& b) {
  if (a.vars() != b.vars()) throw DomainError("varset", "mixed variable sets");
  const int grade = a.grade() + b.grade();
  if (grade > static_cast<int>(a.vars().size())) {
    throw DomainError("wedge", "grade overflow: wedge exceeds the top grade");
  }
  Blade<BasisTag> result(a.vars(), grade);
  for (const auto& [ma, ca] : a.components()) {
    for (const auto& [mb, cb] : b.components()) {
      const int sign = merge_sign(ma, mb);
      if (sign == 0) continue;
      Poly c = ca * cb;
      result.add_term(ma | mb, sign > 0 ? c : -c);
    }
  }
  return result;
}

// Schouten-Nijenhuis bracket in the odd-coordinate calculus (see the header
// comment); grade |A|+|B|-1, Lie bracket on two vector fields.
Multivector schouten(const Multivector& a, const Multivector& b);

// Exterior derivative; requires grade < n.
DiffForm derham_d(const DiffForm& omega);

// Full contraction of equal-grade blades.
Poly pair_contract(const DiffForm& omega, const Multivector& a);

// Parses the canonical blade text emitted by to_string().
Multivector parse_multivector(std::string_view text, const VarSet& vars);
DiffForm parse_diff_form(std::string_view text, const VarSet& vars);

// Volume form (1/k) dx^1 ^ ... ^ dx^n, determined by its conformal factor k.
// Non-vanishing of k is machine-checked when k is a nonzero constant plus
// even-exponent monomials whose coefficients share the constant's sign;
// otherwise the caller must attest it.
class VolumeForm {
 public:
  enum class Nonvanishing { Verified, Attested };

  explicit VolumeForm(Poly k, bool attested = false);

  const Poly& factor() const { return k_; }
  Nonvanishing status() const { return status_; }
  const VarSet& vars() const { return k_.vars(); }
  std::string status_label() const {
    return status_ == Nonvanishing::Verified ? "verified" : "attested";
  }

  static bool pattern_nonvanishing(const Poly& k);

 private:
  Poly k_;
  Nonvanishing status_;
};

// div_mu(X) with L_X mu = div_mu(X) mu; for mu = (1/k) vol this equals
// sum_i d(X^i)/dx_i - X(k)/k.
RationalFn divergence(const Multivector& x, const VolumeForm& mu);

}  // namespace frpoisson

#endif
