#include "frpoisson/mapping_class.hpp"

#include <algorithm>

namespace frpoisson {

std::string H1Lattice::basis_label(std::size_t i) const {
  if (i >= rank()) throw DomainError("lattice", "basis index out of range");
  const std::size_t handle = i / 2 + 1;
  return (i % 2 == 0 ? "a" : "b") + std::to_string(handle);
}

bool is_primitive(const CurveClass& c) {
  Int g(0);
  for (const Int& v : c) {
    Int t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    g = t;
  }
  return g == 1;
}

Int intersection(const H1Lattice& lattice, const CurveClass& u, const CurveClass& v) {
  if (u.size() != lattice.rank() || v.size() != lattice.rank()) {
    throw DomainError("intersection", "class vector length must be 2g");
  }
  // <u, v> = u^T J v with the block form: sum over handles of
  // u_a v_b - u_b v_a.
  Int result(0);
  for (std::size_t h = 0; h < lattice.genus; ++h) {
    result += u[2 * h] * v[2 * h + 1] - u[2 * h + 1] * v[2 * h];
  }
  return result;
}

ZMatrix dehn_twist_matrix(const H1Lattice& lattice, const CurveClass& c) {
  if (c.size() != lattice.rank()) {
    throw DomainError("twist", "curve class length must be 2g");
  }
  if (!is_primitive(c)) {
    throw DomainError("twist", "twisting curve class must be primitive");
  }
  const std::size_t n = lattice.rank();
  const std::vector<Int> jc = lattice.intersection_form().apply(c);
  ZMatrix m = ZMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) += c[i] * jc[j];
  }
  return m;
}

namespace {

// Inverse of the unipotent transvection I + c (Jc)^T is I - c (Jc)^T.
ZMatrix twist_inverse(const H1Lattice& lattice, const CurveClass& c) {
  const std::size_t n = lattice.rank();
  const std::vector<Int> jc = lattice.intersection_form().apply(c);
  ZMatrix m = ZMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= c[i] * jc[j];
  }
  return m;
}

}  // namespace

ZMatrix word_matrix(const TwistWord& word) {
  const H1Lattice lattice{word.genus};
  ZMatrix result = ZMatrix::identity(lattice.rank());
  for (const TwistFactor& factor : word.factors) {
    if (factor.exponent != 1 && factor.exponent != -1) {
      throw DomainError("word", "twist exponents must be +1 or -1");
    }
    const ZMatrix m = factor.exponent == 1 ? dehn_twist_matrix(lattice, factor.curve)
                                           : twist_inverse(lattice, factor.curve);
    result = result * m;
  }
  return result;
}

HurwitzReport hurwitz_check(const TwistWord& word, const CurveClass& c) {
  const H1Lattice lattice{word.genus};
  if (c.size() != lattice.rank()) {
    throw DomainError("hurwitz", "curve class length must be 2g");
  }
  const ZMatrix w = word_matrix(word);
  HurwitzReport report;
  report.fixes_c = w.apply(c) == c;
  const ZMatrix tc = dehn_twist_matrix(lattice, c);
  report.equals_pm_twist_c = (w == tc) || (w == -tc);
  return report;
}

namespace {

// Finds an integer combination v of the generators with <u, v> equal to the
// gcd of all pairings, scanning generators in order (lowest index wins ties).
struct GcdCombination {
  Int gcd;
  CurveClass vector;
};

GcdCombination pairing_gcd_combination(const H1Lattice& lattice, const CurveClass& u,
                                       const std::vector<CurveClass>& generators) {
  const std::size_t n = lattice.rank();
  GcdCombination result{Int(0), CurveClass(n, Int(0))};
  for (const CurveClass& g : generators) {
    const Int pairing = intersection(lattice, u, g);
    if (sgn(pairing) == 0) continue;
    if (sgn(result.gcd) == 0) {
      // First nonzero pairing: take g with a sign that makes it positive.
      if (sgn(pairing) > 0) {
        result.gcd = pairing;
        result.vector = g;
      } else {
        result.gcd = -pairing;
        for (std::size_t i = 0; i < n; ++i) result.vector[i] = -g[i];
      }
      continue;
    }
    if (mpz_divisible_p(pairing.get_mpz_t(), result.gcd.get_mpz_t())) continue;
    Int s, t, d;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), result.gcd.get_mpz_t(),
               pairing.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      result.vector[i] = s * result.vector[i] + t * g[i];
    }
    result.gcd = d;
  }
  return result;
}

// x' = x - <u, x> v + <v, x> u has <u, x'> = <v, x'> = 0 when <u, v> = 1.
CurveClass project_off_pair(const H1Lattice& lattice, const CurveClass& u, const CurveClass& v,
                            const CurveClass& x) {
  const Int pu = intersection(lattice, u, x);
  const Int pv = intersection(lattice, v, x);
  CurveClass out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - pu * v[i] + pv * u[i];
  return out;
}

bool is_zero_vector(const CurveClass& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

}  // namespace

LatticeMap genus_reduction(const H1Lattice& lattice, const CurveClass& c) {
  if (lattice.genus == 0) throw DomainError("genus_reduction", "genus must be at least 1");
  if (c.size() != lattice.rank()) {
    throw DomainError("genus_reduction", "curve class length must be 2g");
  }
  if (!is_primitive(c)) throw DomainError("genus_reduction", "curve class must be primitive");
  const std::size_t n = lattice.rank();

  // Dual partner d with <c, d> = 1 out of the standard basis vectors.
  std::vector<CurveClass> standard;
  for (std::size_t i = 0; i < n; ++i) {
    CurveClass e(n, Int(0));
    e[i] = 1;
    standard.push_back(e);
  }
  GcdCombination dual = pairing_gcd_combination(lattice, c, standard);
  if (dual.gcd != 1) {
    throw DomainError("genus_reduction", "failed to complete the class symplectically");
  }
  const CurveClass d = dual.vector;

  // Generators of the symplectic complement of span{c, d}.
  std::vector<CurveClass> generators;
  for (const CurveClass& e : standard) {
    CurveClass projected = project_off_pair(lattice, c, d, e);
    if (!is_zero_vector(projected)) generators.push_back(std::move(projected));
  }

  // Extract standard pairs from the complement.
  std::vector<CurveClass> basis{c, d};
  while (!generators.empty()) {
    CurveClass u = generators.front();
    GcdCombination comb = pairing_gcd_combination(lattice, u, generators);
    if (sgn(comb.gcd) == 0) {
      throw DomainError("genus_reduction", "degenerate complement pairing");
    }
    if (comb.gcd != 1) {
      // u = gcd * (primitive vector); the primitive vector stays in the
      // complement lattice.
      for (Int& entry : u) {
        Int q;
        mpz_divexact(q.get_mpz_t(), entry.get_mpz_t(), comb.gcd.get_mpz_t());
        entry = q;
      }
      comb = pairing_gcd_combination(lattice, u, generators);
      if (comb.gcd != 1) {
        throw DomainError("genus_reduction", "failed to extract a unimodular pair");
      }
    }
    const CurveClass v = comb.vector;
    basis.push_back(u);
    basis.push_back(v);
    std::vector<CurveClass> remaining;
    for (const CurveClass& g : generators) {
      CurveClass projected = project_off_pair(lattice, u, v, g);
      if (!is_zero_vector(projected)) remaining.push_back(std::move(projected));
    }
    generators = std::move(remaining);
  }
  if (basis.size() != n) {
    throw DomainError("genus_reduction", "symplectic completion has wrong rank");
  }

  // Coordinates with respect to the completed basis B: B^{-1} = -J B^T J for
  // symplectic B. The reduction keeps the rows after (c, d).
  ZMatrix b(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) b.at(row, col) = basis[col][row];
  }
  const ZMatrix j = lattice.intersection_form();
  const ZMatrix b_inv = (-j) * b.transposed() * j;

  LatticeMap map;
  map.from_genus = lattice.genus;
  map.to_genus = lattice.genus - 1;
  map.matrix = ZMatrix(n - 2, n);
  for (std::size_t row = 2; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      map.matrix.at(row - 2, col) = b_inv.at(row, col);
    }
  }
  return map;
}

LatticeMap genus_increase(const H1Lattice& lattice) {
  LatticeMap map;
  map.from_genus = lattice.genus;
  map.to_genus = lattice.genus + 1;
  map.matrix = ZMatrix(2 * map.to_genus, 2 * map.from_genus);
  for (std::size_t i = 0; i < lattice.rank(); ++i) map.matrix.at(i, i) = 1;
  return map;
}

CurveClass monodromy_h1_action(const ZMatrix& action, const CurveClass& alpha) {
  if (action.cols() != alpha.size()) {
    throw DomainError("monodromy", "class vector length does not match the action");
  }
  return action.apply(alpha);
}

}  // namespace frpoisson
