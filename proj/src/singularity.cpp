#include "frpoisson/singularity.hpp"

#include <algorithm>
#include <array>

namespace frpoisson {

std::string germ_kind_name(GermKind kind) {
  switch (kind) {
    case GermKind::Fold: return "fold";
    case GermKind::Cusp: return "cusp";
    case GermKind::Lefschetz: return "lefschetz";
    case GermKind::Birth: return "birth";
    case GermKind::Merging: return "merging";
    case GermKind::Flipping: return "flipping";
    case GermKind::Wrinkling: return "wrinkling";
    case GermKind::Custom: return "custom";
  }
  return "custom";
}

std::optional<GermKind> germ_kind_from_name(const std::string& name) {
  for (GermKind kind : {GermKind::Fold, GermKind::Cusp, GermKind::Lefschetz, GermKind::Birth,
                        GermKind::Merging, GermKind::Flipping, GermKind::Wrinkling,
                        GermKind::Custom}) {
    if (germ_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

Rat sign_value(char c) {
  if (c == '+') return Rat(1);
  if (c == '-') return Rat(-1);
  throw DomainError("normal_form", "sign pattern must use '+' and '-' only");
}

Poly sq(const VarSet& vars, std::size_t i) {
  return Poly::variable(vars, i) * Poly::variable(vars, i);
}

}  // namespace

MapGerm normal_form(GermKind kind, const std::string& signs) {
  const VarSet vars = VarSet::r4();
  const Poly t = Poly::variable(vars, 0);
  const Poly x = Poly::variable(vars, 1);
  switch (kind) {
    case GermKind::Fold: {
      if (signs.size() != 3) {
        throw DomainError("normal_form", "fold needs three signs (x^2, y^2, z^2)");
      }
      Poly f2 = sq(vars, 1).scaled(sign_value(signs[0])) +
                sq(vars, 2).scaled(sign_value(signs[1])) +
                sq(vars, 3).scaled(sign_value(signs[2]));
      return MapGerm{t, f2, kind, std::nullopt};
    }
    case GermKind::Cusp: {
      if (signs.size() != 2) {
        throw DomainError("normal_form", "cusp needs two signs (y^2, z^2)");
      }
      Poly f2 = x * x * x + t * x + sq(vars, 2).scaled(sign_value(signs[0])) +
                sq(vars, 3).scaled(sign_value(signs[1]));
      return MapGerm{t, f2, kind, std::nullopt};
    }
    case GermKind::Lefschetz: {
      if (!signs.empty()) {
        throw DomainError("normal_form", "the Lefschetz chart takes no sign pattern");
      }
      Poly f1 = t * t - sq(vars, 1) + sq(vars, 2) - sq(vars, 3);
      Poly f2 = (t * x).scaled(Rat(2)) +
                (Poly::variable(vars, 2) * Poly::variable(vars, 3)).scaled(Rat(2));
      return MapGerm{f1, f2, kind, std::nullopt};
    }
    default:
      throw DomainError("normal_form",
                        "normal_form covers fold, cusp, lefschetz; use lekili_move for moves");
  }
}

MapGerm lekili_move(GermKind kind, const Rat& s) {
  const VarSet vars = VarSet::r4();
  const Poly t = Poly::variable(vars, 0);
  const Poly x = Poly::variable(vars, 1);
  const Poly y2 = sq(vars, 2);
  const Poly z2 = sq(vars, 3);
  const Poly sc = Poly::constant(vars, s);
  switch (kind) {
    case GermKind::Birth: {
      // x^3 - 3x(s - t^2) + y^2 - z^2: empty locus for s < 0, one cusp point
      // at s = 0, the circle x^2 + t^2 = s for s > 0.
      Poly f2 = x * x * x - x.scaled(Rat(3)) * (sc - t * t) + y2 - z2;
      return MapGerm{t, f2, kind, s};
    }
    case GermKind::Merging: {
      Poly f2 = x * x * x - x.scaled(Rat(3)) * (t * t - sc) + y2 - z2;
      return MapGerm{t, f2, kind, s};
    }
    case GermKind::Flipping: {
      Poly f2 = x * x * x * x - (x * x) * sc + x * t + y2 - z2;
      return MapGerm{t, f2, kind, s};
    }
    case GermKind::Wrinkling: {
      Poly f1 = t * t - sq(vars, 1) + y2 - z2 + t * sc;
      Poly f2 = (t * x).scaled(Rat(2)) +
                (Poly::variable(vars, 2) * Poly::variable(vars, 3)).scaled(Rat(2));
      return MapGerm{f1, f2, kind, s};
    }
    default:
      throw DomainError("lekili_move", "moves are birth, merging, flipping, wrinkling");
  }
}

MapGerm custom_germ(Poly f1, Poly f2) {
  if (f1.vars() != f2.vars()) throw DomainError("varset", "mixed variable sets");
  return MapGerm{std::move(f1), std::move(f2), GermKind::Custom, std::nullopt};
}

namespace {

std::vector<Poly> jacobian_minors(const MapGerm& germ) {
  const VarSet& vars = germ.f1.vars();
  const std::size_t n = vars.size();
  std::vector<Poly> d1, d2;
  for (std::size_t i = 0; i < n; ++i) {
    d1.push_back(germ.f1.derivative(i));
    d2.push_back(germ.f2.derivative(i));
  }
  std::vector<Poly> minors;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      minors.push_back(d1[a] * d2[b] - d1[b] * d2[a]);
    }
  }
  return minors;
}

const std::vector<Rat>& grid_values() {
  static const std::vector<Rat> values = {rat(-2), rat(-1), rat(-1, 2), rat(0),
                                          rat(1, 2), rat(1), rat(2)};
  return values;
}

}  // namespace

SingularLocus singular_locus(const MapGerm& germ) {
  SingularLocus locus;
  locus.generators = jacobian_minors(germ);

  constexpr std::size_t kSampleCap = 64;
  const std::size_t n = germ.f1.vars().size();
  std::vector<std::size_t> idx(n, 0);
  const std::vector<Rat>& grid = grid_values();
  while (true) {
    std::vector<Rat> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = grid[idx[i]];
    bool on_locus = true;
    for (const Poly& g : locus.generators) {
      if (!is_zero(g.evaluate(point))) {
        on_locus = false;
        break;
      }
    }
    if (on_locus) {
      locus.sample_points.push_back(point);
      if (locus.sample_points.size() >= kSampleCap) break;
    }
    std::size_t carry = n;
    while (carry > 0) {
      if (++idx[carry - 1] < grid.size()) break;
      idx[carry - 1] = 0;
      --carry;
    }
    if (carry == 0) break;
  }
  return locus;
}

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Regular: return "regular";
    case SingularityClass::Fold: return "fold";
    case SingularityClass::Cusp: return "cusp";
    case SingularityClass::LefschetzDegenerate: return "lefschetz_degenerate";
    case SingularityClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

SingularityClass classify_point(const MapGerm& germ, const std::vector<Rat>& p) {
  const VarSet& vars = germ.f1.vars();
  const std::size_t n = vars.size();
  if (p.size() != n) throw DomainError("classify", "point dimension mismatch");

  const std::vector<Poly> generators = jacobian_minors(germ);
  for (const Poly& g : generators) {
    if (!is_zero(g.evaluate(p))) {
      throw DomainError("classify", "point is not on the singular locus");
    }
  }

  QMatrix df(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    df.at(0, i) = germ.f1.derivative(i).evaluate(p);
    df.at(1, i) = germ.f2.derivative(i).evaluate(p);
  }
  if (df.rank() == 0) return SingularityClass::LefschetzDegenerate;

  // Tangent space of the locus from the generator Jacobian; a smooth curve
  // gives a one-dimensional kernel.
  QMatrix locus_jac(generators.size(), n);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      locus_jac.at(r, i) = generators[r].derivative(i).evaluate(p);
    }
  }
  auto tangent = locus_jac.nullspace();
  if (tangent.size() != 1) return SingularityClass::Unclassified;

  const std::vector<Rat> image = df.apply(tangent.front());
  const bool tangent_in_kernel =
      std::all_of(image.begin(), image.end(), [](const Rat& v) { return is_zero(v); });
  return tangent_in_kernel ? SingularityClass::Cusp : SingularityClass::Fold;
}

PoissonBivector bivector_from_map(const MapGerm& germ, const VolumeForm& mu) {
  if (germ.f1.vars() != mu.vars()) throw DomainError("varset", "mixed variable sets");
  CasimirPair pair{germ.f1, germ.f2, mu.factor(), mu};
  return build_fr_bivector(pair);
}

}  // namespace frpoisson
