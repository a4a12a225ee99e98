#include "frpoisson/poisson.hpp"

#include <algorithm>
#include <array>

namespace frpoisson {

CasimirPair make_casimir_pair(Poly F, Poly G, Poly k, bool attest_k) {
  if (F.vars() != G.vars() || F.vars() != k.vars()) {
    throw DomainError("varset", "mixed variable sets in Casimir pair");
  }
  VolumeForm mu(k, attest_k);
  return CasimirPair{std::move(F), std::move(G), std::move(k), std::move(mu)};
}

CasimirPair casimir_pair_from_strings(const std::string& f_text, const std::string& g_text,
                                      const std::string& k_text, const VarSet& vars,
                                      bool attest_k) {
  return make_casimir_pair(Poly::parse(f_text, vars), Poly::parse(g_text, vars),
                           Poly::parse(k_text, vars), attest_k);
}

PoissonBivector::PoissonBivector(Multivector body, std::optional<CasimirPair> provenance)
    : body_(std::move(body)), provenance_(std::move(provenance)) {
  if (body_.grade() != 2) throw DomainError("bivector", "body must have grade 2");
}

Poly PoissonBivector::entry(std::size_t i, std::size_t j) const {
  if (i == j) return Poly::zero(vars());
  const Mask m = (Mask(1) << i) | (Mask(1) << j);
  Poly c = body_.coefficient(m);
  return i < j ? c : -c;
}

QMatrix PoissonBivector::anchor_matrix_at(const std::vector<Rat>& point) const {
  const std::size_t n = vars().size();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      m.at(j, i) = entry(j, i).evaluate(point);
    }
  }
  return m;
}

std::size_t PoissonBivector::rank_at(const std::vector<Rat>& point) const {
  return anchor_matrix_at(point).rank();
}

namespace {

// Levi-Civita symbol on four indices.
int levi_civita4(int i, int j, int r, int s) {
  const std::array<int, 4> p{i, j, r, s};
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
    }
  }
  int sign = 1;
  std::array<int, 4> q = p;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (q[a] > q[b]) {
        std::swap(q[a], q[b]);
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

PoissonBivector build_fr_bivector(const CasimirPair& pair) {
  const VarSet& vars = pair.F.vars();
  if (vars.size() != 4) {
    throw DomainError("fr_bivector", "the determinant construction requires four variables");
  }
  std::array<Poly, 4> dF{pair.F.derivative(0), pair.F.derivative(1), pair.F.derivative(2),
                         pair.F.derivative(3)};
  std::array<Poly, 4> dG{pair.G.derivative(0), pair.G.derivative(1), pair.G.derivative(2),
                         pair.G.derivative(3)};
  Multivector body(vars, 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Poly comp = Poly::zero(vars);
      for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
          const int eps = levi_civita4(i, j, r, s);
          if (eps == 0) continue;
          Poly term = dF[r] * dG[s];
          comp += eps > 0 ? term : -term;
        }
      }
      body.add_term((Mask(1) << i) | (Mask(1) << j), pair.k * comp);
    }
  }
  return PoissonBivector(std::move(body), pair);
}

Multivector anchor_push(const PoissonBivector& pi, const DiffForm& omega) {
  const VarSet& vars = pi.vars();
  if (vars != omega.vars()) throw DomainError("varset", "mixed variable sets");
  const std::size_t n = vars.size();

  // pi_bar(dx^i) = sum_j pi^{ji} d_j, cached per used index.
  std::vector<std::optional<Multivector>> anchor_of(n);
  auto anchor_basis = [&](std::size_t i) -> const Multivector& {
    if (!anchor_of[i]) {
      Multivector v(vars, 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        v.add_term(Mask(1) << j, pi.entry(j, i));
      }
      anchor_of[i] = std::move(v);
    }
    return *anchor_of[i];
  };

  Multivector result(vars, omega.grade());
  for (const auto& [m, c] : omega.components()) {
    Multivector pushed = Multivector::from_function(Poly::constant(vars, Rat(1)));
    for (std::size_t i : mask_indices(m)) pushed = wedge(pushed, anchor_basis(i));
    result = result + pushed.scaled(c);
  }
  return result;
}

Multivector hamiltonian_vf(const PoissonBivector& pi, const Poly& h) {
  return anchor_push(pi, derham_d(DiffForm::from_function(h)));
}

Poly poisson_bracket(const PoissonBivector& pi, const Poly& g, const Poly& h) {
  const std::size_t n = pi.vars().size();
  Poly result = Poly::zero(pi.vars());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly pij = pi.entry(i, j);
      if (pij.is_zero()) continue;
      result += pij * (g.derivative(i) * h.derivative(j) - g.derivative(j) * h.derivative(i));
    }
  }
  return result;
}

bool is_casimir(const PoissonBivector& pi, const Poly& f) {
  return hamiltonian_vf(pi, f).is_zero();
}

Multivector jacobi_check(const PoissonBivector& pi) { return schouten(pi.body(), pi.body()); }

Rat leaf_symplectic_at(const PoissonBivector& pi, const std::vector<Rat>& point,
                       const std::vector<Rat>& u, const std::vector<Rat>& v) {
  const std::size_t n = pi.vars().size();
  if (point.size() != n || u.size() != n || v.size() != n) {
    throw DomainError("leaf", "vector dimension mismatch");
  }
  QMatrix anchor = pi.anchor_matrix_at(point);
  if (anchor.rank() != 2) {
    throw DomainError("leaf", "singular point of the foliation: anchor rank is not 2");
  }
  auto alpha = anchor.solve(u);
  if (!alpha) throw DomainError("leaf", "u is not tangent to the leaf");
  auto beta = anchor.solve(v);
  if (!beta) throw DomainError("leaf", "v is not tangent to the leaf");
  // omega(u, v) = pi(alpha, beta) = <alpha, v>.
  Rat value(0);
  for (std::size_t i = 0; i < n; ++i) value += (*alpha)[i] * v[i];
  return value;
}

bool RationalVectorField::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const RationalFn& f) { return f.is_zero(); });
}

bool RationalVectorField::is_polynomial() const {
  return std::all_of(components.begin(), components.end(),
                     [](const RationalFn& f) { return f.is_polynomial(); });
}

Multivector RationalVectorField::as_multivector() const {
  Multivector result(vars, 1);
  for (std::size_t i = 0; i < components.size(); ++i) {
    result.add_term(Mask(1) << i, components[i].as_poly());
  }
  return result;
}

RationalVectorField modular_vf(const PoissonBivector& pi, const VolumeForm& mu) {
  const VarSet& vars = pi.vars();
  if (vars != mu.vars()) throw DomainError("varset", "mixed variable sets");
  RationalVectorField z{vars, {}};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    DiffForm dxi(vars, 1);
    dxi.add_term(Mask(1) << i, Poly::constant(vars, Rat(1)));
    z.components.push_back(divergence(anchor_push(pi, dxi), mu));
  }
  return z;
}

Multivector modular_rot_formula(const PoissonBivector& pi, const VolumeForm& mu) {
  const VarSet& vars = pi.vars();
  if (vars != mu.vars()) throw DomainError("varset", "mixed variable sets");
  const std::size_t n = vars.size();
  if (n != 3 && n != 4) {
    throw DomainError("modular_rot", "rot formula needs coordinates (x,y,z) or (t,x,y,z)");
  }
  const std::size_t ix = n - 3, iy = n - 2, iz = n - 1;
  if (n == 4) {
    for (std::size_t j = 1; j < 4; ++j) {
      if (!pi.entry(0, j).is_zero()) {
        throw DomainError("modular_rot", "not in lemma normal position: dt components present");
      }
    }
  }
  const Poly& k = mu.factor();
  auto stripped = [&](std::size_t a, std::size_t b) {
    auto q = pi.entry(a, b).divided_exactly_by(k);
    if (!q) {
      throw DomainError("modular_rot", "bivector components are not divisible by the volume factor");
    }
    return *q;
  };
  // pi = k (A1 dy^dz + A2 dz^dx + A3 dx^dy).
  Poly a1 = stripped(iy, iz);
  Poly a2 = -stripped(ix, iz);
  Poly a3 = stripped(ix, iy);

  Multivector result(vars, 1);
  result.add_term(Mask(1) << ix, a3.derivative(iy) - a2.derivative(iz));
  result.add_term(Mask(1) << iy, a1.derivative(iz) - a3.derivative(ix));
  result.add_term(Mask(1) << iz, a2.derivative(ix) - a1.derivative(iy));

  // pi_bar(d log|k|) = pi_bar(dk)/k, exact because the components carry k.
  Multivector pushed_dk = anchor_push(pi, derham_d(DiffForm::from_function(k)));
  for (std::size_t j = 0; j < n; ++j) {
    Poly comp = pushed_dk.coefficient(Mask(1) << j);
    if (comp.is_zero()) continue;
    auto q = comp.divided_exactly_by(k);
    if (!q) {
      throw DomainError("modular_rot", "anchor of dk is not divisible by the volume factor");
    }
    result.add_term(Mask(1) << j, -*q);
  }
  return result;
}

GlueReport region_glue_check(const std::vector<std::pair<std::string, PoissonBivector>>& pieces,
                             const PoissonBivector& base, const RegionWeights& weights) {
  if (!weights.uc_ugamma_disjoint) {
    throw DomainError("glue", "overlapping U_C and U_Gamma: the gluing requires them disjoint");
  }
  GlueReport report;
  report.relation = "sigma+lambda+tau=1";
  report.uc_ugamma_disjoint = true;

  const Poly one = Poly::constant(base.vars(), Rat(1));
  for (const auto& [region, piece] : pieces) {
    if (region != RegionWeights::kRegionW && region != RegionWeights::kRegionCusp &&
        region != RegionWeights::kRegionCircle) {
      throw DomainError("glue", "unknown region '" + region + "'");
    }
    if (report.factors.count(region)) {
      throw DomainError("glue", "duplicate piece for region '" + region + "'");
    }
    if (piece.vars() != base.vars()) throw DomainError("varset", "mixed variable sets");

    // Extract the factor from the first nonzero base component, then verify
    // the whole coefficient array.
    std::optional<Poly> factor;
    for (const auto& [m, bc] : base.body().components()) {
      auto q = piece.body().coefficient(m).divided_exactly_by(bc);
      if (!q) {
        throw DomainError("glue", "cannot glue: piece over " + region +
                                      " is not a polynomial multiple of the base");
      }
      factor = *q;
      break;
    }
    if (!factor) {
      // Zero base: only the zero piece is a multiple.
      if (!piece.body().is_zero()) {
        throw DomainError("glue", "cannot glue: piece over " + region +
                                      " is not a polynomial multiple of the base");
      }
      factor = Poly::zero(base.vars());
    }
    if (piece.body() != base.body().scaled(*factor)) {
      throw DomainError("glue", "cannot glue: piece over " + region +
                                    " is not a polynomial multiple of the base");
    }
    if (region == RegionWeights::kRegionW && *factor != one) {
      throw DomainError("glue", "the W piece must equal the base bivector");
    }
    report.factors.emplace(region, *factor);
  }

  auto weight_term = [&](const char* region, const std::string& symbol) -> std::string {
    auto it = report.factors.find(region);
    if (it == report.factors.end()) return "";
    const Poly& f = it->second;
    if (f == one) return symbol;
    const std::string text = f.to_string();
    return (f.term_count() > 1 ? "(" + text + ")" : text) + "*" + symbol;
  };

  std::vector<std::string> terms;
  if (auto s = weight_term(RegionWeights::kRegionCusp, "sigma"); !s.empty()) terms.push_back(s);
  if (auto s = weight_term(RegionWeights::kRegionCircle, "lambda"); !s.empty()) terms.push_back(s);
  terms.push_back("tau");

  if (terms.size() == 1) {
    // Only the base region: the relation collapses tau to 1.
    report.glued = "pi_F";
  } else {
    std::string sum;
    for (const std::string& t : terms) {
      if (!sum.empty()) sum += " + ";
      sum += t;
    }
    report.glued = "(" + sum + ")*pi_F";
  }
  return report;
}

}  // namespace frpoisson
