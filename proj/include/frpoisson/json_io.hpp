#ifndef FRPOISSON_JSON_IO_HPP
#define FRPOISSON_JSON_IO_HPP

#include <json.hpp>

#include "frpoisson/cohomology.hpp"
#include "frpoisson/poisson.hpp"
#include "frpoisson/singularity.hpp"

namespace frpoisson {

// All CLI documents use ordered JSON with canonical term ordering, so output
// bytes are reproducible run to run.
using OrderedJson = nlohmann::ordered_json;

OrderedJson blade_terms_json(const Multivector& m);
OrderedJson blade_terms_json(const DiffForm& m);
OrderedJson bivector_json(const PoissonBivector& pi);
OrderedJson formal_multivector_json(const FormalMultivector& m);
OrderedJson rational_vf_json(const RationalVectorField& z);
OrderedJson cohomology_report_json(const CohomologyReport& report);
OrderedJson locus_json(const SingularLocus& locus);
OrderedJson zmatrix_json(const ZMatrix& m);
OrderedJson glue_report_json(const GlueReport& report);

}  // namespace frpoisson

#endif
