#include "frpoisson/multivector.hpp"

#include <algorithm>

namespace frpoisson {

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask mask_from_indices(const std::vector<std::size_t>& indices, std::size_t n) {
  Mask m = 0;
  for (std::size_t i : indices) {
    if (i >= n) throw DomainError("blade", "basis index out of range");
    const Mask bit = Mask(1) << i;
    if (m & bit) throw DomainError("blade", "repeated basis index");
    if (bit <= m) throw DomainError("blade", "basis indices must be ascending");
    m |= bit;
  }
  return m;
}

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Multivector schouten(const Multivector& a, const Multivector& b) {
  if (a.vars() != b.vars()) throw DomainError("varset", "mixed variable sets");
  const VarSet& vars = a.vars();
  const int grade = a.grade() + b.grade() - 1;
  if (grade < 0) return Multivector::zero(vars, 0);
  if (grade > static_cast<int>(vars.size())) {
    // Any multivector of grade above n vanishes identically on n variables.
    return Multivector::zero(vars, static_cast<int>(vars.size()));
  }
  // [A,B] = sum_i dA/dx_i ^ dL B/dz_i - sum_i dR A/dz_i ^ dB/dx_i, with
  // dR/dz_i = (-1)^(|A|-1) dL/dz_i on homogeneous A.
  Multivector result(vars, grade);
  const bool a_right_flip = (a.grade() - 1) % 2 != 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Multivector da_coef = a.coefficient_derivative(i);
    Multivector db_odd = b.odd_derivative(i);
    if (!da_coef.is_zero() && !db_odd.is_zero()) {
      result = result + wedge(da_coef, db_odd);
    }
    Multivector da_odd = a.odd_derivative(i);
    Multivector db_coef = b.coefficient_derivative(i);
    if (!da_odd.is_zero() && !db_coef.is_zero()) {
      Multivector w = wedge(da_odd, db_coef);
      result = result + (a_right_flip ? w : w.scaled(Rat(-1)));
    }
  }
  return result;
}

DiffForm derham_d(const DiffForm& omega) {
  const VarSet& vars = omega.vars();
  if (omega.grade() >= static_cast<int>(vars.size())) {
    throw DomainError("derham", "exterior derivative requires grade < n");
  }
  DiffForm result(vars, omega.grade() + 1);
  for (const auto& [m, c] : omega.components()) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const Mask bit = Mask(1) << i;
      if (m & bit) continue;
      Poly dc = c.derivative(i);
      if (dc.is_zero()) continue;
      const int sign = merge_sign(bit, m);
      result.add_term(m | bit, sign > 0 ? dc : -dc);
    }
  }
  return result;
}

Poly pair_contract(const DiffForm& omega, const Multivector& a) {
  if (omega.vars() != a.vars()) throw DomainError("varset", "mixed variable sets");
  if (omega.grade() != a.grade()) {
    throw DomainError("pair", "grade mismatch in pairing");
  }
  Poly result = Poly::zero(omega.vars());
  for (const auto& [m, c] : omega.components()) {
    auto it = a.components().find(m);
    if (it != a.components().end()) result += c * it->second;
  }
  return result;
}

VolumeForm::VolumeForm(Poly k, bool attested) : k_(std::move(k)) {
  if (k_.is_zero()) throw DomainError("volume", "volume factor must be nonzero");
  if (pattern_nonvanishing(k_)) {
    status_ = Nonvanishing::Verified;
  } else if (attested) {
    status_ = Nonvanishing::Attested;
  } else {
    throw DomainError("volume",
                      "cannot machine-check that the volume factor is non-vanishing; "
                      "pass the attestation flag to accept it");
  }
}

bool VolumeForm::pattern_nonvanishing(const Poly& k) {
  const Exponents zero(k.vars().size(), 0);
  auto it = k.terms().find(zero);
  if (it == k.terms().end()) return false;
  const int constant_sign = sgn(it->second);
  for (const auto& [e, c] : k.terms()) {
    if (e == zero) continue;
    if (sgn(c) != constant_sign) return false;
    for (int exp : e) {
      if (exp % 2 != 0) return false;
    }
  }
  return true;
}

RationalFn divergence(const Multivector& x, const VolumeForm& mu) {
  if (x.grade() != 1) throw DomainError("divergence", "divergence expects a vector field");
  if (x.vars() != mu.vars()) throw DomainError("varset", "mixed variable sets");
  const VarSet& vars = x.vars();
  const Poly& k = mu.factor();
  Poly plain_div = Poly::zero(vars);
  Poly x_of_k = Poly::zero(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Poly xi = x.coefficient(Mask(1) << i);
    plain_div += xi.derivative(i);
    x_of_k += xi * k.derivative(i);
  }
  return RationalFn(plain_div * k - x_of_k, k);
}

// ---------------------------------------------------------------------------
// Canonical blade text parsing: terms "(coef)*tok^tok^..." joined by '+',
// where tok is "d/dvar" for multivectors and "dvar" for forms. Grade-0 input
// is plain polynomial text.
// ---------------------------------------------------------------------------

namespace {

struct BladeTermText {
  std::string coef;
  std::vector<std::string> factors;
};

// Splits at top-level '+' (depth 0 w.r.t. parentheses).
std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

template <typename BasisTag>
Blade<BasisTag> parse_blade(std::string_view text, const VarSet& vars) {
  const std::string whole = strip(text);
  if (whole.empty()) throw DomainError("blade_parse", "empty multivector text");
  if (whole == "0") return Blade<BasisTag>::zero(vars, 0);
  if (whole.front() != '(') {
    // No '(coef)*basis' terms: grade-0 value given as polynomial text.
    return Blade<BasisTag>::from_function(Poly::parse(whole, vars));
  }
  Blade<BasisTag> result(vars, 0);
  bool first = true;
  for (const std::string& raw : split_top_level(whole, '+')) {
    const std::string term = strip(raw);
    if (term.empty()) throw DomainError("blade_parse", "empty term in multivector text");
    if (term.front() != '(') throw DomainError("blade_parse", "expected '(coef)*...' term");
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') {
        --depth;
        if (depth == 0) {
          close = i;
          break;
        }
      }
    }
    if (close == std::string::npos) throw DomainError("blade_parse", "unbalanced parentheses");
    Poly coef = Poly::parse(std::string_view(term).substr(1, close - 1), vars);
    std::string rest = strip(std::string_view(term).substr(close + 1));
    if (rest.empty() || rest.front() != '*') {
      throw DomainError("blade_parse", "expected '*' after coefficient");
    }
    rest = strip(std::string_view(rest).substr(1));
    std::vector<std::size_t> indices;
    for (const std::string& factor_raw : split_top_level(rest, '^')) {
      const std::string factor = strip(factor_raw);
      bool matched = false;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (factor == BasisTag::token(vars.name(i))) {
          indices.push_back(i);
          matched = true;
          break;
        }
      }
      if (!matched) throw DomainError("blade_parse", "unknown basis factor '" + factor + "'");
    }
    Blade<BasisTag> term_blade =
        Blade<BasisTag>::basis_element(vars, indices, coef);
    if (first) {
      result = term_blade;
      first = false;
    } else {
      result = result + term_blade;
    }
  }
  return result;
}

}  // namespace

Multivector parse_multivector(std::string_view text, const VarSet& vars) {
  return parse_blade<PartialsBasis>(text, vars);
}

DiffForm parse_diff_form(std::string_view text, const VarSet& vars) {
  return parse_blade<FormsBasis>(text, vars);
}

}  // namespace frpoisson
