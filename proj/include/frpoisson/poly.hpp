#ifndef FRPOISSON_POLY_HPP
#define FRPOISSON_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frpoisson/error.hpp"
#include "frpoisson/rational.hpp"

namespace frpoisson {

// The variable set is fixed per session: charts on R^4 use (t, x, y, z) and
// the R^3 structures use (x, y, z). All values built over one VarSet must
// share it; operations raise DomainError on mismatch.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

  static VarSet r4() { return VarSet({"t", "x", "y", "z"}); }
  static VarSet r3() { return VarSet({"x", "y", "z"}); }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }
  bool operator!=(const VarSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

using Exponents = std::vector<int>;

// Graded lexicographic order: compare total degree first, then the exponent
// vector lexicographically (earlier variables more significant).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct WeightVector {
  std::vector<int> weights;  // one positive entry per variable

  explicit WeightVector(std::vector<int> w);
  static WeightVector uniform(std::size_t n) { return WeightVector(std::vector<int>(n, 1)); }
  int operator[](std::size_t i) const { return weights[i]; }
  std::size_t size() const { return weights.size(); }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no zero coefficient is stored; every exponent vector has
// length vars().size(); the term map is kept in graded-lex order, so equal
// polynomials print identically.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexLess>;

  explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

  static Poly zero(const VarSet& vars) { return Poly(vars); }
  static Poly constant(const VarSet& vars, const Rat& c);
  static Poly variable(const VarSet& vars, std::size_t index);
  static Poly monomial(const VarSet& vars, Exponents e, const Rat& c);

  // Expression grammar: integers, rationals p/q, declared variable names,
  // + - * ^ (integer exponents >= 0), parentheses, unary minus. Implicit
  // multiplication is a syntax error. Throws ParseError with a position.
  static Poly parse(std::string_view text, const VarSet& vars);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly scaled(const Rat& c) const;
  Poly pow(int exponent) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  // Formal partial derivative with respect to a declared variable.
  Poly derivative(std::size_t var) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  // Substitutes a polynomial for one variable (used for parameter values and
  // the formal-scaling checks). The replacement must share the VarSet.
  Poly substituted(std::size_t var, const Poly& value) const;

  int total_degree() const;  // -1 for the zero polynomial
  int weighted_degree(const WeightVector& w) const;  // max over terms; -1 for zero
  bool is_weighted_homogeneous(const WeightVector& w, int* degree_out = nullptr) const;

  // Leading term in graded-lex order. Precondition: nonzero.
  const std::pair<const Exponents, Rat>& leading_term() const;

  // Componentwise min of exponent vectors (the common monomial factor).
  Exponents monomial_content() const;

  // Exact division: returns the quotient if *this == q * divisor, otherwise
  // nullopt. Division by zero is a DomainError.
  std::optional<Poly> divided_exactly_by(const Poly& divisor) const;

  // Canonical text: graded-lex descending, explicit '*' and '^', no unary plus.
  std::string to_string() const;

  void add_term(const Exponents& e, const Rat& c);  // accumulates, drops zeros

 private:
  VarSet vars_;
  TermMap terms_;
};

// Splits p into weighted-homogeneous parts, degrees strictly increasing.
std::vector<std::pair<int, Poly>> weighted_decompose(const Poly& p, const WeightVector& w);

}  // namespace frpoisson

#endif
