#ifndef FRPOISSON_POISSON_HPP
#define FRPOISSON_POISSON_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frpoisson/linalg.hpp"
#include "frpoisson/multivector.hpp"

namespace frpoisson {

// Prescribed Casimir data (F, G) together with the conformal volume factor k;
// the compatible volume form is (1/k) dt^dx^dy^dz.
struct CasimirPair {
  Poly F;
  Poly G;
  Poly k;
  VolumeForm mu;
};

CasimirPair make_casimir_pair(Poly F, Poly G, Poly k, bool attest_k = false);
CasimirPair casimir_pair_from_strings(const std::string& f_text, const std::string& g_text,
                                      const std::string& k_text, const VarSet& vars,
                                      bool attest_k = false);

// A bivector field pi with its anchor data. The anchor matrix entries
// pi^{ij} = {x^i, x^j} are derived from the stored grade-2 body under the
// fixed convention; the anchor acts by pi_bar(a)_j = sum_i pi^{ji} a_i.
class PoissonBivector {
 public:
  explicit PoissonBivector(Multivector body,
                           std::optional<CasimirPair> provenance = std::nullopt);

  const Multivector& body() const { return body_; }
  const VarSet& vars() const { return body_.vars(); }
  const std::optional<CasimirPair>& provenance() const { return provenance_; }

  // pi^{ij}, exactly skew: entry(i, j) = -entry(j, i), zero on the diagonal.
  Poly entry(std::size_t i, std::size_t j) const;

  // The anchor matrix evaluated at a rational point; column space = image of
  // the anchor there.
  QMatrix anchor_matrix_at(const std::vector<Rat>& point) const;
  std::size_t rank_at(const std::vector<Rat>& point) const;

 private:
  Multivector body_;
  std::optional<CasimirPair> provenance_;
};

// pi^{ij} = k sum_{r,s} eps_{ijrs} dF/dx^r dG/dx^s (the Levi-Civita
// determinant form). F and G are Casimirs of the result; rank <= 2.
PoissonBivector build_fr_bivector(const CasimirPair& pair);

// Extension of the anchor to p-forms, multiplicative over the wedge;
// identity on functions.
Multivector anchor_push(const PoissonBivector& pi, const DiffForm& omega);

// X_h = pi_bar(dh); satisfies X_h(g) = {g, h}.
Multivector hamiltonian_vf(const PoissonBivector& pi, const Poly& h);

// {g, h} = pi(dg, dh).
Poly poisson_bracket(const PoissonBivector& pi, const Poly& g, const Poly& h);

bool is_casimir(const PoissonBivector& pi, const Poly& f);

// [pi, pi]; the zero trivector exactly when pi is Poisson.
Multivector jacobi_check(const PoissonBivector& pi);

// Value of the leaf symplectic form at a rational point on a pair of tangent
// vectors: solves pi_bar(alpha) = u, pi_bar(beta) = v exactly and returns
// pi(alpha, beta) = <alpha, v>. The value does not depend on the preimage
// choice. Requires anchor rank exactly 2 at the point and u, v in its image.
Rat leaf_symplectic_at(const PoissonBivector& pi, const std::vector<Rat>& point,
                       const std::vector<Rat>& u, const std::vector<Rat>& v);

// Modular vector field in rational-function components.
struct RationalVectorField {
  VarSet vars;
  std::vector<RationalFn> components;

  bool is_zero() const;
  bool is_polynomial() const;
  Multivector as_multivector() const;  // requires polynomial components
};

// Z_pi(h) = div_mu(pi_bar(dh)), assembled on coordinate functions.
RationalVectorField modular_vf(const PoissonBivector& pi, const VolumeForm& mu);

// The rot-based expression <rot[A1,A2,A3], (dx,dy,dz)> - pi_bar(d log|k|) on
// bivectors with no dt components, where A_i are the k-stripped components
// of pi over (dy^dz, dz^dx, dx^dy). Computed literally as a cross-check
// against modular_vf; disagreements are reported by callers, never patched.
Multivector modular_rot_formula(const PoissonBivector& pi, const VolumeForm& mu);

// Region bookkeeping for the global gluing Pi = (g sigma + h lambda + tau) pi_F
// over M = W u U_C u U_Gamma. The cut-offs sigma, lambda, tau stay formal
// symbols subject to the single recorded relation sigma + lambda + tau = 1.
struct RegionWeights {
  static constexpr const char* kRegionW = "W";
  static constexpr const char* kRegionCusp = "U_C";       // isolated singularities
  static constexpr const char* kRegionCircle = "U_Gamma"; // circle singularities

  bool uc_ugamma_disjoint = true;  // declared topology
};

struct GlueReport {
  std::map<std::string, Poly> factors;  // extracted conformal factor per region
  std::string glued;                    // formal glued expression
  std::string relation;                 // "sigma+lambda+tau=1"
  bool uc_ugamma_disjoint = true;
};

// Verifies each piece is an exact polynomial multiple of the base bivector,
// extracts the factors, and emits the formal glued expression.
GlueReport region_glue_check(const std::vector<std::pair<std::string, PoissonBivector>>& pieces,
                             const PoissonBivector& base, const RegionWeights& weights);

}  // namespace frpoisson

#endif
