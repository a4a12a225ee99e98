#ifndef FRPOISSON_COHOMOLOGY_HPP
#define FRPOISSON_COHOMOLOGY_HPP

#include <string>
#include <utility>
#include <vector>

#include "frpoisson/poisson.hpp"

namespace frpoisson {

// d_pi(A) = [pi, A]; squares to zero exactly when pi is Poisson.
Multivector lichnerowicz_d(const PoissonBivector& pi, const Multivector& a);

// A monomial multivector x^e * d_{i1} ^ ... ^ d_{ip}. Its weighted degree is
// deg_w(x^e) minus the weights of the blade indices, which makes d_pi a map
// of pure degree when pi is weighted-homogeneous.
struct BasisElement {
  Mask mask;
  Exponents exponents;
};

struct GradedBlock {
  int p = 0;
  int d = 0;             // weighted degree (filtration level when filtration is set)
  bool filtration = false;
  int shift = 0;         // degree shift of d_pi; target block is (p+1, d+shift)
  std::vector<BasisElement> source_basis;
  std::vector<BasisElement> target_basis;
  QMatrix matrix;        // target_dim x source_dim, exact expansion of d_pi
};

struct BlockDims {
  int p = 0;
  int d = 0;
  long ker = 0;
  long im = 0;  // image arriving from grade p-1
  long h = 0;
};

struct CohomologyReport {
  int cutoff = 0;
  std::vector<BlockDims> blocks;
  std::vector<std::string> flags;
};

inline constexpr std::size_t kDefaultBlockCap = 20000;

// Enumerates the graded (or filtered) block at (p, d) and the exact matrix of
// d_pi out of it. Raises when a basis would exceed the cap.
GradedBlock complex_block(const PoissonBivector& pi, const WeightVector& w, int p, int d,
                          std::size_t cap = kDefaultBlockCap);

// Per-block kernel/image/cohomology dimensions via fraction-free rank
// computation, for all grades and weighted degrees up to the cutoff.
CohomologyReport cohomology_dims(const PoissonBivector& pi, const WeightVector& w, int cutoff,
                                 std::size_t cap = kDefaultBlockCap);

// Tube data around a symplectic leaf: a transverse covector pair, the formal
// bump constant c_S (the on-leaf value with c_S^2 = Vol(S)/Vol(M)), and a
// leaf volume representative.
struct LeafTubeData {
  DiffForm tau1;
  DiffForm tau2;
  DiffForm vol_S;
  std::string cs_symbol = "c_S";
  std::vector<Rat> base_point;
};

// Validates grades and the independence of the transverse pair at the base
// point.
LeafTubeData make_leaf_tube(DiffForm tau1, DiffForm tau2, DiffForm vol_s,
                            std::vector<Rat> base_point, std::string cs_symbol = "c_S");

// A polynomial multivector scaled by a formal positive constant.
struct FormalMultivector {
  Multivector body;
  std::string formal_factor;
};

// c_S * pi_bar(tau1) ^ pi_bar(tau2): the anchor image of the Poincare-dual
// representative of the leaf.
FormalMultivector poincare_dual_image(const PoissonBivector& pi, const LeafTubeData& tube);

// c_S * pi_bar(tau1) ^ pi_bar(tau2) ^ pi_bar(vol_S): the top-grade class
// representative.
FormalMultivector thom_top_image(const PoissonBivector& pi, const LeafTubeData& tube);

// Monodromy class: applies the symplectic matrix to alpha, realizes the image
// in H^1 as a one-form through basis_forms, and pushes the cup product with
// the transverse pair through the anchor:
//     c_S * pi_bar(rho(alpha)) ^ pi_bar(tau1) ^ pi_bar(tau2).
FormalMultivector mon_pi(const PoissonBivector& pi, const LeafTubeData& tube,
                         const std::vector<Int>& alpha, const ZMatrix& mono,
                         const std::vector<DiffForm>& basis_forms);

// Declared pairwise region intersections for the Mayer-Vietoris bookkeeping.
struct RegionTopology {
  std::vector<std::pair<std::string, std::string>> empty_pairs;
  std::vector<std::pair<std::string, std::string>> nonempty_pairs;
};

// Direct-sum dimension bookkeeping over regions with declared-empty pairwise
// intersections; refuses anything else (the connecting map is out of scope).
CohomologyReport mayer_vietoris_assemble(
    const std::vector<std::pair<std::string, CohomologyReport>>& reports,
    const RegionTopology& topology);

}  // namespace frpoisson

#endif
