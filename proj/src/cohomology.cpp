#include "frpoisson/cohomology.hpp"

#include <algorithm>
#include <map>

namespace frpoisson {

Multivector lichnerowicz_d(const PoissonBivector& pi, const Multivector& a) {
  return schouten(pi.body(), a);
}

namespace {

// Full weighted degree of a blade monomial: coefficient degree minus the
// weights of the blade indices.
int full_degree(const Exponents& e, Mask mask, const WeightVector& w) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
  for (std::size_t i : mask_indices(mask)) d -= w[i];
  return d;
}

struct GradingInfo {
  bool homogeneous = true;
  int shift = 0;  // degree of d_pi (max term degree in the filtered case)
};

GradingInfo analyze_grading(const PoissonBivector& pi, const WeightVector& w) {
  GradingInfo info;
  bool first = true;
  for (const auto& [mask, coef] : pi.body().components()) {
    for (const auto& [e, c] : coef.terms()) {
      const int d = full_degree(e, mask, w);
      if (first) {
        info.shift = d;
        first = false;
      } else if (d != info.shift) {
        info.homogeneous = false;
        info.shift = std::max(info.shift, d);
      }
    }
  }
  return info;
}

void enumerate_monomials_rec(std::size_t var, int remaining, const WeightVector& w, bool exact,
                             Exponents& current, std::vector<Exponents>& out) {
  if (var == w.size()) {
    if (!exact || remaining == 0) out.push_back(current);
    return;
  }
  for (int e = 0; e * w[var] <= remaining; ++e) {
    current[var] = e;
    enumerate_monomials_rec(var + 1, remaining - e * w[var], w, exact, current, out);
  }
  current[var] = 0;
}

// Monomials of weighted degree exactly m (or <= m), in graded-lex order.
std::vector<Exponents> enumerate_monomials(const WeightVector& w, int m, bool exact) {
  std::vector<Exponents> out;
  if (m < 0) return out;
  Exponents current(w.size(), 0);
  enumerate_monomials_rec(0, m, w, exact, current, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Mask> grade_masks(std::size_t n, int p) {
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    if (mask_grade(m) == p) masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), MaskLess{});
  return masks;
}

std::vector<BasisElement> block_basis(const VarSet& vars, const WeightVector& w, int p, int d,
                                      bool filtration, std::size_t cap) {
  std::vector<BasisElement> basis;
  for (Mask mask : grade_masks(vars.size(), p)) {
    int coef_degree = d;
    for (std::size_t i : mask_indices(mask)) coef_degree += w[i];
    for (const Exponents& e : enumerate_monomials(w, coef_degree, !filtration)) {
      basis.push_back(BasisElement{mask, e});
      if (basis.size() > cap) {
        throw DomainError("block", "basis size exceeds the configured cap");
      }
    }
  }
  return basis;
}

}  // namespace

GradedBlock complex_block(const PoissonBivector& pi, const WeightVector& w, int p, int d,
                          std::size_t cap) {
  const VarSet& vars = pi.vars();
  const std::size_t n = vars.size();
  if (w.size() != n) throw DomainError("weights", "weight vector length mismatch");
  if (p < 0 || p > static_cast<int>(n)) throw DomainError("block", "grade out of range");

  const GradingInfo grading = analyze_grading(pi, w);
  GradedBlock block;
  block.p = p;
  block.d = d;
  block.filtration = !grading.homogeneous;
  block.shift = grading.shift;
  block.source_basis = block_basis(vars, w, p, d, block.filtration, cap);
  if (p + 1 <= static_cast<int>(n)) {
    block.target_basis = block_basis(vars, w, p + 1, d + block.shift, block.filtration, cap);
  }

  std::map<std::pair<Mask, Exponents>, std::size_t> target_index;
  for (std::size_t i = 0; i < block.target_basis.size(); ++i) {
    target_index.emplace(std::make_pair(block.target_basis[i].mask,
                                        block.target_basis[i].exponents),
                         i);
  }

  block.matrix = QMatrix(block.target_basis.size(), block.source_basis.size());
  for (std::size_t col = 0; col < block.source_basis.size(); ++col) {
    const BasisElement& src = block.source_basis[col];
    Multivector a(vars, p);
    a.add_term(src.mask, Poly::monomial(vars, src.exponents, Rat(1)));
    Multivector image = lichnerowicz_d(pi, a);
    if (p + 1 > static_cast<int>(n)) {
      if (!image.is_zero()) throw DomainError("block", "image above top grade");
      continue;
    }
    for (const auto& [mask, coef] : image.components()) {
      for (const auto& [e, c] : coef.terms()) {
        auto it = target_index.find(std::make_pair(mask, e));
        if (it == target_index.end()) {
          throw DomainError("block", "image monomial outside the target block");
        }
        block.matrix.at(it->second, col) = c;
      }
    }
  }
  return block;
}

CohomologyReport cohomology_dims(const PoissonBivector& pi, const WeightVector& w, int cutoff,
                                 std::size_t cap) {
  const VarSet& vars = pi.vars();
  const std::size_t n = vars.size();
  if (!jacobi_check(pi).is_zero()) {
    throw DomainError("cohomology", "non-Poisson input: [pi, pi] != 0");
  }
  const GradingInfo grading = analyze_grading(pi, w);

  CohomologyReport report;
  report.cutoff = cutoff;
  if (!grading.homogeneous) {
    report.flags.push_back("pi not weighted-homogeneous: report is per-filtration-level, not graded");
  }

  // Lowest possible full degree at grade p: a constant coefficient on the
  // heaviest blade.
  auto min_degree = [&](int p) {
    std::vector<int> weights = w.weights;
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    int s = 0;
    for (int i = 0; i < p; ++i) s += weights[i];
    return -s;
  };

  // rank cache keyed by (p, d)
  std::map<std::pair<int, int>, std::pair<long, long>> computed;  // (src_dim, rank)
  auto block_rank = [&](int p, int d) -> std::pair<long, long> {
    auto key = std::make_pair(p, d);
    auto it = computed.find(key);
    if (it != computed.end()) return it->second;
    GradedBlock block = complex_block(pi, w, p, d, cap);
    auto value = std::make_pair(static_cast<long>(block.source_basis.size()),
                                static_cast<long>(block.matrix.rank()));
    computed.emplace(key, value);
    return value;
  };

  for (int p = 0; p <= static_cast<int>(n); ++p) {
    for (int d = min_degree(p); d <= cutoff; ++d) {
      auto [dim, rank] = block_rank(p, d);
      if (dim == 0) continue;
      long im = 0;
      if (p > 0) im = block_rank(p - 1, d - grading.shift).second;
      BlockDims dims;
      dims.p = p;
      dims.d = d;
      dims.ker = dim - rank;
      dims.im = im;
      dims.h = dims.ker - dims.im;
      report.blocks.push_back(dims);
    }
  }
  return report;
}

LeafTubeData make_leaf_tube(DiffForm tau1, DiffForm tau2, DiffForm vol_s,
                            std::vector<Rat> base_point, std::string cs_symbol) {
  if (tau1.grade() != 1 || tau2.grade() != 1) {
    throw DomainError("tube", "transverse covectors must have grade 1");
  }
  if (vol_s.grade() != 2) throw DomainError("tube", "leaf volume form must have grade 2");
  if (tau1.vars() != tau2.vars() || tau1.vars() != vol_s.vars()) {
    throw DomainError("varset", "mixed variable sets");
  }
  const std::size_t n = tau1.vars().size();
  if (base_point.size() != n) throw DomainError("tube", "base point dimension mismatch");
  QMatrix rows(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.at(0, i) = tau1.coefficient(Mask(1) << i).evaluate(base_point);
    rows.at(1, i) = tau2.coefficient(Mask(1) << i).evaluate(base_point);
  }
  if (rows.rank() != 2) {
    throw DomainError("tube", "transverse covectors are dependent at the base point");
  }
  return LeafTubeData{std::move(tau1), std::move(tau2), std::move(vol_s), std::move(cs_symbol),
                      std::move(base_point)};
}

FormalMultivector poincare_dual_image(const PoissonBivector& pi, const LeafTubeData& tube) {
  Multivector body = wedge(anchor_push(pi, tube.tau1), anchor_push(pi, tube.tau2));
  return FormalMultivector{std::move(body), tube.cs_symbol};
}

FormalMultivector thom_top_image(const PoissonBivector& pi, const LeafTubeData& tube) {
  Multivector body = wedge(wedge(anchor_push(pi, tube.tau1), anchor_push(pi, tube.tau2)),
                           anchor_push(pi, tube.vol_S));
  return FormalMultivector{std::move(body), tube.cs_symbol};
}

FormalMultivector mon_pi(const PoissonBivector& pi, const LeafTubeData& tube,
                         const std::vector<Int>& alpha, const ZMatrix& mono,
                         const std::vector<DiffForm>& basis_forms) {
  if (alpha.size() % 2 != 0 || alpha.empty()) {
    throw DomainError("mon_pi", "class vector must have length 2g");
  }
  const std::size_t rank = alpha.size();
  if (mono.rows() != rank || mono.cols() != rank) {
    throw DomainError("mon_pi", "matrix dimension mismatch");
  }
  if (basis_forms.size() != rank) {
    throw DomainError("mon_pi", "basis form assignment must have length 2g");
  }
  const ZMatrix j = standard_intersection_form(rank / 2);
  if (mono.transposed() * j * mono != j) {
    throw DomainError("mon_pi", "matrix does not preserve the intersection form");
  }
  for (const DiffForm& f : basis_forms) {
    if (f.grade() != 1) throw DomainError("mon_pi", "basis forms must have grade 1");
    if (f.vars() != pi.vars()) throw DomainError("varset", "mixed variable sets");
  }
  const std::vector<Int> moved = mono.apply(alpha);
  DiffForm realized(pi.vars(), 1);
  for (std::size_t i = 0; i < rank; ++i) {
    realized = realized + basis_forms[i].scaled(Rat(moved[i]));
  }
  Multivector body = wedge(wedge(anchor_push(pi, realized), anchor_push(pi, tube.tau1)),
                           anchor_push(pi, tube.tau2));
  return FormalMultivector{std::move(body), tube.cs_symbol};
}

CohomologyReport mayer_vietoris_assemble(
    const std::vector<std::pair<std::string, CohomologyReport>>& reports,
    const RegionTopology& topology) {
  if (reports.empty()) throw DomainError("mayer_vietoris", "no regions given");

  auto pair_listed = [](const std::vector<std::pair<std::string, std::string>>& list,
                        const std::string& a, const std::string& b) {
    return std::any_of(list.begin(), list.end(), [&](const auto& p) {
      return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
  };

  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      const std::string& a = reports[i].first;
      const std::string& b = reports[j].first;
      if (pair_listed(topology.nonempty_pairs, a, b)) {
        throw DomainError("mayer_vietoris",
                          "regions " + a + " and " + b + " declared overlapping; "
                          "direct-sum assembly needs empty intersections");
      }
      if (!pair_listed(topology.empty_pairs, a, b)) {
        throw DomainError("mayer_vietoris",
                          "intersection of " + a + " and " + b + " not declared");
      }
    }
  }

  CohomologyReport out;
  out.cutoff = reports.front().second.cutoff;
  for (const auto& [name, rep] : reports) out.cutoff = std::min(out.cutoff, rep.cutoff);

  std::map<std::pair<int, int>, BlockDims> merged;
  for (const auto& [name, rep] : reports) {
    for (const std::string& flag : rep.flags) {
      if (std::find(out.flags.begin(), out.flags.end(), flag) == out.flags.end()) {
        out.flags.push_back(flag);
      }
    }
    for (const BlockDims& b : rep.blocks) {
      if (b.d > out.cutoff) continue;
      auto key = std::make_pair(b.p, b.d);
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, b);
      } else {
        it->second.ker += b.ker;
        it->second.im += b.im;
        it->second.h += b.h;
      }
    }
  }
  for (const auto& [key, dims] : merged) out.blocks.push_back(dims);
  if (reports.size() > 1) {
    std::string regions = "assembled regions:";
    for (const auto& [name, rep] : reports) regions += " " + name;
    out.flags.push_back(regions);
  }
  return out;
}

}  // namespace frpoisson
