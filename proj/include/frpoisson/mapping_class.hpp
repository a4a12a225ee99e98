#ifndef FRPOISSON_MAPPING_CLASS_HPP
#define FRPOISSON_MAPPING_CLASS_HPP

#include <string>
#include <vector>

#include "frpoisson/linalg.hpp"

namespace frpoisson {

// Rank-2g integer lattice modelling H^1 of a genus-g surface with the
// standard symplectic intersection form, basis a1, b1, ..., ag, bg.
struct H1Lattice {
  std::size_t genus = 0;

  std::size_t rank() const { return 2 * genus; }
  ZMatrix intersection_form() const { return standard_intersection_form(genus); }
  std::string basis_label(std::size_t i) const;
};

using CurveClass = std::vector<Int>;

bool is_primitive(const CurveClass& c);

// u^T J v; bilinear and skew.
Int intersection(const H1Lattice& lattice, const CurveClass& u, const CurveClass& v);

// Homology transvection of the twist about a primitive curve class:
// T_c(x) = x + <x, c> c. Symplectic, unipotent, fixes c.
ZMatrix dehn_twist_matrix(const H1Lattice& lattice, const CurveClass& c);

struct TwistFactor {
  CurveClass curve;
  int exponent = 1;  // +1 or -1
};

struct TwistWord {
  std::size_t genus = 0;
  std::vector<TwistFactor> factors;
};

// Ordered product of twist matrices and their inverses.
ZMatrix word_matrix(const TwistWord& word);

struct HurwitzReport {
  bool fixes_c = false;
  bool equals_pm_twist_c = false;
};

// Both readings of the Hurwitz relation for (word; c): whether the word
// matrix fixes c, and whether it equals plus or minus the twist about c.
HurwitzReport hurwitz_check(const TwistWord& word, const CurveClass& c);

// An intersection-compatible linear map between lattices of different genus.
struct LatticeMap {
  std::size_t from_genus = 0;
  std::size_t to_genus = 0;
  ZMatrix matrix;  // 2*to_genus x 2*from_genus
};

// Completes the primitive class c to a symplectic basis (c, d, e_1, ...,
// e_{2g-2}) by exact extended-gcd reduction (ties broken by lowest index),
// then projects away span{c, d}. Kills c and d, preserves the form on the
// complement.
LatticeMap genus_reduction(const H1Lattice& lattice, const CurveClass& c);

// Isometric inclusion into the first 2g coordinates of the genus-(g+1)
// lattice.
LatticeMap genus_increase(const H1Lattice& lattice);

// Applies a word matrix or genus map to a class vector.
CurveClass monodromy_h1_action(const ZMatrix& action, const CurveClass& alpha);

}  // namespace frpoisson

#endif
