#include "frpoisson/json_io.hpp"

namespace frpoisson {

namespace {

template <typename BasisTag>
OrderedJson terms_json_impl(const Blade<BasisTag>& blade) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [mask, coef] : blade.components()) {
    OrderedJson term;
    OrderedJson indices = OrderedJson::array();
    for (std::size_t i : mask_indices(mask)) indices.push_back(i + 1);  // x^1..x^n
    term["indices"] = std::move(indices);
    term["coef"] = coef.to_string();
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace

OrderedJson blade_terms_json(const Multivector& m) { return terms_json_impl(m); }
OrderedJson blade_terms_json(const DiffForm& m) { return terms_json_impl(m); }

OrderedJson bivector_json(const PoissonBivector& pi) {
  OrderedJson doc;
  doc["variables"] = pi.vars().names();
  doc["terms"] = blade_terms_json(pi.body());
  if (pi.provenance()) {
    OrderedJson prov;
    prov["type"] = "casimir_pair";
    prov["F"] = pi.provenance()->F.to_string();
    prov["G"] = pi.provenance()->G.to_string();
    prov["k"] = pi.provenance()->k.to_string();
    prov["volume_nonvanishing"] = pi.provenance()->mu.status_label();
    doc["provenance"] = std::move(prov);
  } else {
    doc["provenance"] = nullptr;
  }
  return doc;
}

OrderedJson formal_multivector_json(const FormalMultivector& m) {
  OrderedJson doc;
  doc["formal_factor"] = m.formal_factor;
  doc["terms"] = blade_terms_json(m.body);
  return doc;
}

OrderedJson rational_vf_json(const RationalVectorField& z) {
  OrderedJson comps = OrderedJson::array();
  for (const RationalFn& f : z.components) {
    OrderedJson comp;
    comp["num"] = f.num().to_string();
    comp["den"] = f.den().to_string();
    comps.push_back(std::move(comp));
  }
  return comps;
}

OrderedJson cohomology_report_json(const CohomologyReport& report) {
  OrderedJson doc;
  doc["cutoff"] = report.cutoff;
  OrderedJson blocks = OrderedJson::array();
  for (const BlockDims& b : report.blocks) {
    OrderedJson block;
    block["p"] = b.p;
    block["d"] = b.d;
    block["ker"] = b.ker;
    block["im"] = b.im;
    block["h"] = b.h;
    blocks.push_back(std::move(block));
  }
  doc["blocks"] = std::move(blocks);
  doc["flags"] = report.flags;
  return doc;
}

OrderedJson locus_json(const SingularLocus& locus) {
  OrderedJson doc;
  OrderedJson gens = OrderedJson::array();
  for (const Poly& g : locus.generators) gens.push_back(g.to_string());
  doc["generators"] = std::move(gens);
  OrderedJson points = OrderedJson::array();
  for (const auto& p : locus.sample_points) {
    OrderedJson point = OrderedJson::array();
    for (const Rat& v : p) point.push_back(rat_to_string(v));
    points.push_back(std::move(point));
  }
  doc["sample_points"] = std::move(points);
  return doc;
}

OrderedJson zmatrix_json(const ZMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Int& v = m.at(r, c);
      if (v.fits_slong_p()) {
        row.push_back(static_cast<long>(v.get_si()));
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson glue_report_json(const GlueReport& report) {
  OrderedJson doc;
  OrderedJson factors;
  for (const auto& [region, factor] : report.factors) {
    factors[region] = factor.to_string();
  }
  doc["factors"] = std::move(factors);
  doc["glued"] = report.glued;
  doc["relation"] = report.relation;
  doc["uc_ugamma"] = report.uc_ugamma_disjoint ? "disjoint" : "overlapping";
  return doc;
}

}  // namespace frpoisson
