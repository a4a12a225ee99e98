#ifndef FRPOISSON_SINGULARITY_HPP
#define FRPOISSON_SINGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "frpoisson/poisson.hpp"

namespace frpoisson {

enum class GermKind { Fold, Cusp, Lefschetz, Birth, Merging, Flipping, Wrinkling, Custom };

std::string germ_kind_name(GermKind kind);
std::optional<GermKind> germ_kind_from_name(const std::string& name);

// A map germ R^4 -> R^2 in the chart coordinates (t, x, y, z), with any
// deformation parameter already substituted.
struct MapGerm {
  Poly f1;
  Poly f2;
  GermKind kind = GermKind::Custom;
  std::optional<Rat> parameter;
};

// Chart normal forms: fold (t, s1 x^2 + s2 y^2 + s3 z^2) with signs "+--"
// style, cusp (t, x^3 + t x + s1 y^2 + s2 z^2) with two signs, and the
// Lefschetz chart (t^2 - x^2 + y^2 - z^2, 2 t x + 2 y z) with no signs.
MapGerm normal_form(GermKind kind, const std::string& signs = "");

// One-parameter deformation charts (birth, merging, flipping, wrinkling)
// with the parameter substituted exactly.
MapGerm lekili_move(GermKind kind, const Rat& s);

MapGerm custom_germ(Poly f1, Poly f2);

// The critical ideal of a germ: all six 2x2 minors of the 2x4 Jacobian,
// together with rational sample points found on a fixed grid and verified
// exactly against every generator.
struct SingularLocus {
  std::vector<Poly> generators;
  std::vector<std::vector<Rat>> sample_points;
};

SingularLocus singular_locus(const MapGerm& germ);

enum class SingularityClass { Regular, Fold, Cusp, LefschetzDegenerate, Unclassified };

std::string to_string(SingularityClass c);

// Pointwise classification on the locus: rank(df_p) = 0 gives
// lefschetz_degenerate; otherwise the tangent line of the locus (kernel of
// the generator Jacobian) is tested against ker(df_p) - transverse means
// fold, contained means cusp. Points where the locus is not a smooth curve
// come back unclassified.
SingularityClass classify_point(const MapGerm& germ, const std::vector<Rat>& p);

// The Jacobian Poisson structure with Casimirs (f1, f2) and conformal factor
// mu; its rank-degenerate set is exactly the singular locus of the germ.
PoissonBivector bivector_from_map(const MapGerm& germ, const VolumeForm& mu);

}  // namespace frpoisson

#endif
