#include "frpoisson/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace frpoisson {

std::optional<std::size_t> VarSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

WeightVector::WeightVector(std::vector<int> w) : weights(std::move(w)) {
  for (int wi : weights) {
    if (wi < 1) throw DomainError("weights", "weight entries must be >= 1");
  }
}

Poly Poly::constant(const VarSet& vars, const Rat& c) {
  Poly p(vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

Poly Poly::variable(const VarSet& vars, std::size_t index) {
  if (index >= vars.size()) throw DomainError("variable", "variable index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(vars, e, Rat(1));
}

Poly Poly::monomial(const VarSet& vars, Exponents e, const Rat& c) {
  if (e.size() != vars.size()) throw DomainError("monomial", "exponent vector length mismatch");
  Poly p(vars);
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  assert(e.size() == vars_.size());
  if (frpoisson::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (frpoisson::is_zero(it->second)) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw DomainError("constant", "polynomial is not constant");
  return terms_.begin()->second;
}

Poly Poly::operator+(const Poly& other) const {
  Poly result = *this;
  result += other;
  return result;
}

Poly& Poly::operator+=(const Poly& other) {
  if (vars_ != other.vars_) throw DomainError("varset", "mixed variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly& Poly::operator-=(const Poly& other) {
  *this += -other;
  return *this;
}

Poly Poly::operator-() const {
  Poly result(vars_);
  for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
  return result;
}

Poly Poly::scaled(const Rat& c) const {
  Poly result(vars_);
  if (frpoisson::is_zero(c)) return result;
  for (const auto& [e, coef] : terms_) result.terms_.emplace(e, coef * c);
  return result;
}

Poly Poly::operator*(const Poly& other) const {
  if (vars_ != other.vars_) throw DomainError("varset", "mixed variable sets");
  Poly result(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      result.add_term(e, ca * cb);
    }
  }
  return result;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("pow", "negative exponent");
  Poly result = constant(vars_, Rat(1));
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

bool Poly::operator==(const Poly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw DomainError("derivative", "unknown variable");
  Poly result(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    result.add_term(d, c * Rat(e[var]));
  }
  return result;
}

namespace {

Rat rat_pow(const Rat& base, int e) {
  Rat result(1);
  for (int i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw DomainError("evaluate", "point dimension mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat value = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) value *= rat_pow(point[i], e[i]);
    }
    total += value;
  }
  return total;
}

Poly Poly::substituted(std::size_t var, const Poly& value) const {
  if (vars_ != value.vars_) throw DomainError("varset", "mixed variable sets");
  Poly result(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    Poly term = monomial(vars_, rest, c) * value.pow(e[var]);
    result += term;
  }
  return result;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  }
  return deg;
}

int Poly::weighted_degree(const WeightVector& w) const {
  if (w.size() != vars_.size()) throw DomainError("weights", "weight vector length mismatch");
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
    deg = std::max(deg, d);
  }
  return deg;
}

bool Poly::is_weighted_homogeneous(const WeightVector& w, int* degree_out) const {
  if (w.size() != vars_.size()) throw DomainError("weights", "weight vector length mismatch");
  bool first = true;
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degree_out) *degree_out = first ? 0 : deg;
  return true;
}

const std::pair<const Exponents, Rat>& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading_term", "zero polynomial has no leading term");
  return *terms_.rbegin();
}

Exponents Poly::monomial_content() const {
  if (terms_.empty()) return Exponents(vars_.size(), 0);
  Exponents content = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) content[i] = std::min(content[i], e[i]);
  }
  return content;
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& divisor) const {
  if (vars_ != divisor.vars_) throw DomainError("varset", "mixed variable sets");
  if (divisor.is_zero()) throw DomainError("division", "division by the zero polynomial");
  Poly quotient(vars_);
  Poly remainder = *this;
  const auto& [de, dc] = divisor.leading_term();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = remainder.leading_term();
    Exponents qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) return std::nullopt;
    }
    Rat qc = rc / dc;
    quotient.add_term(qe, qc);
    remainder -= monomial(vars_, qe, qc) * divisor;
  }
  return quotient;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rat abs_c = abs(c);
    std::string body;
    if (mono.empty()) {
      body = rat_to_string(abs_c);
    } else if (abs_c == 1) {
      body = mono;
    } else {
      body = rat_to_string(abs_c) + "*" + mono;
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + body;
    } else {
      out += (sgn(c) < 0 ? "-" : "+") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

enum class TokKind { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::size_t pos;
  std::string text;  // for Number / Name
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = {TokKind::End, pos_, ""};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      // optional '/q' makes a rational literal
      if (pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t probe = pos_ + 1;
        if (probe >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[probe]))) {
          throw ParseError(pos_, "expected digits after '/' in rational literal");
        }
        pos_ = probe;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        throw ParseError(pos_, "implicit multiplication is not allowed; write '*'");
      }
      current_ = {TokKind::Number, start, std::string(text_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {TokKind::Name, start, std::string(text_.substr(start, pos_ - start))};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {TokKind::Plus, start, "+"}; return;
      case '-': current_ = {TokKind::Minus, start, "-"}; return;
      case '*': current_ = {TokKind::Star, start, "*"}; return;
      case '^': current_ = {TokKind::Caret, start, "^"}; return;
      case '(': current_ = {TokKind::LParen, start, "("}; return;
      case ')': current_ = {TokKind::RParen, start, ")"}; return;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : lexer_(text), vars_(vars) {}

  Poly run() {
    Poly result = parse_expr();
    if (lexer_.current().kind != TokKind::End) {
      throw ParseError(lexer_.current().pos, "unexpected trailing input");
    }
    return result;
  }

 private:
  Poly parse_expr() {
    bool negate = false;
    if (lexer_.current().kind == TokKind::Minus) {
      negate = true;
      lexer_.advance();
    }
    Poly result = parse_term();
    if (negate) result = -result;
    while (lexer_.current().kind == TokKind::Plus || lexer_.current().kind == TokKind::Minus) {
      const bool minus = lexer_.current().kind == TokKind::Minus;
      lexer_.advance();
      Poly rhs = parse_term();
      result = minus ? result - rhs : result + rhs;
    }
    return result;
  }

  Poly parse_term() {
    Poly result = parse_factor();
    while (lexer_.current().kind == TokKind::Star) {
      lexer_.advance();
      result = result * parse_factor();
    }
    return result;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    if (lexer_.current().kind == TokKind::Caret) {
      lexer_.advance();
      if (lexer_.current().kind == TokKind::Minus) {
        throw ParseError(lexer_.current().pos, "negative exponent");
      }
      if (lexer_.current().kind != TokKind::Number) {
        throw ParseError(lexer_.current().pos, "expected integer exponent after '^'");
      }
      const std::string text = lexer_.current().text;
      if (text.find('/') != std::string::npos) {
        throw ParseError(lexer_.current().pos, "exponent must be a non-negative integer");
      }
      lexer_.advance();
      return base.pow(std::stoi(text));
    }
    return base;
  }

  Poly parse_base() {
    const Token tok = lexer_.current();
    switch (tok.kind) {
      case TokKind::Number: {
        lexer_.advance();
        return Poly::constant(vars_, rat_from_string(tok.text));
      }
      case TokKind::Name: {
        auto idx = vars_.index(tok.text);
        if (!idx) throw ParseError(tok.pos, "unknown variable '" + tok.text + "'");
        lexer_.advance();
        return Poly::variable(vars_, *idx);
      }
      case TokKind::LParen: {
        lexer_.advance();
        Poly inner = parse_expr();
        if (lexer_.current().kind != TokKind::RParen) {
          throw ParseError(lexer_.current().pos, "expected ')'");
        }
        lexer_.advance();
        return inner;
      }
      default:
        throw ParseError(tok.pos, "expected number, variable, or '('");
    }
  }

  Lexer lexer_;
  const VarSet& vars_;
};

}  // namespace

Poly Poly::parse(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).run();
}

std::vector<std::pair<int, Poly>> weighted_decompose(const Poly& p, const WeightVector& w) {
  if (w.size() != p.vars().size()) throw DomainError("weights", "weight vector length mismatch");
  std::map<int, Poly> parts;
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, Poly::zero(p.vars())).first;
    it->second.add_term(e, c);
  }
  std::vector<std::pair<int, Poly>> result;
  result.reserve(parts.size());
  for (auto& [d, part] : parts) result.emplace_back(d, std::move(part));
  return result;
}

}  // namespace frpoisson
