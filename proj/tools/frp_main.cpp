// frp: command-line front end for the Poisson structure engine.
//
// Every subcommand prints one complete JSON document on stdout. Exit codes:
// 0 success, 1 domain error (with an {"error": ...} body), 2 usage error
// (nothing on stdout).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frpoisson/json_io.hpp"
#include "frpoisson/mapping_class.hpp"

namespace fr = frpoisson;

namespace {

constexpr int kSchemaVersion = 1;

struct BivectorOptions {
  std::string f_text, g_text;
  std::string k_text = "1";
  std::string pi_text;
  bool attest_k = false;
  bool r3 = false;

  fr::VarSet vars() const { return r3 ? fr::VarSet::r3() : fr::VarSet::r4(); }

  void add_to(CLI::App* cmd, bool require_pair) {
    auto* f = cmd->add_option("-F", f_text, "Casimir F as an expression");
    auto* g = cmd->add_option("-G", g_text, "Casimir G as an expression");
    cmd->add_option("-k", k_text, "conformal factor k (default 1)");
    cmd->add_flag("--attest-k", attest_k, "attest that k is non-vanishing");
    auto* pi = cmd->add_option("--pi", pi_text, "bivector given directly in canonical text form");
    cmd->add_flag("--r3", r3, "use coordinates (x,y,z) instead of (t,x,y,z)");
    if (require_pair) {
      f->required();
      g->required();
      pi->excludes(f);
    } else {
      pi->excludes(f);
      pi->excludes(g);
    }
  }

  fr::PoissonBivector build() const {
    const fr::VarSet vs = vars();
    if (!pi_text.empty()) {
      fr::Multivector body = fr::parse_multivector(pi_text, vs);
      if (body.grade() != 2) throw fr::DomainError("bivector", "--pi must have grade 2");
      return fr::PoissonBivector(std::move(body));
    }
    if (f_text.empty() || g_text.empty()) {
      throw fr::DomainError("usage", "provide either -F and -G or --pi");
    }
    return fr::build_fr_bivector(
        fr::casimir_pair_from_strings(f_text, g_text, k_text, vs, attest_k));
  }

  fr::VolumeForm volume() const { return fr::VolumeForm(fr::Poly::parse(k_text, vars()), attest_k); }
};

struct GermOptions {
  std::string germ_name;
  std::string signs;
  std::string move_name;
  std::string s_text = "0";
  std::string f1_text, f2_text;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--germ", germ_name, "normal form: fold, cusp, or lefschetz");
    cmd->add_option("--signs", signs, "sign pattern for fold (3 signs) or cusp (2 signs)");
    cmd->add_option("--move", move_name, "deformation move: birth, merging, flipping, wrinkling");
    cmd->add_option("--s", s_text, "deformation parameter (rational)");
    cmd->add_option("--f1", f1_text, "first component of a custom germ");
    cmd->add_option("--f2", f2_text, "second component of a custom germ");
  }

  fr::MapGerm build() const {
    if (!germ_name.empty()) {
      auto kind = fr::germ_kind_from_name(germ_name);
      if (!kind) throw fr::DomainError("germ", "unknown germ kind '" + germ_name + "'");
      return fr::normal_form(*kind, signs);
    }
    if (!move_name.empty()) {
      auto kind = fr::germ_kind_from_name(move_name);
      if (!kind) throw fr::DomainError("germ", "unknown move '" + move_name + "'");
      return fr::lekili_move(*kind, fr::rat_from_string(s_text));
    }
    if (!f1_text.empty() && !f2_text.empty()) {
      const fr::VarSet vs = fr::VarSet::r4();
      return fr::custom_germ(fr::Poly::parse(f1_text, vs), fr::Poly::parse(f2_text, vs));
    }
    throw fr::DomainError("usage", "provide --germ, --move, or --f1/--f2");
  }
};

std::vector<fr::Rat> parse_point(const std::string& text, std::size_t n) {
  std::vector<fr::Rat> point;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) point.push_back(fr::rat_from_string(part));
  if (point.size() != n) {
    throw fr::DomainError("point", "expected " + std::to_string(n) + " comma-separated rationals");
  }
  return point;
}

fr::CurveClass parse_curve(const std::string& text, std::size_t rank) {
  fr::CurveClass curve;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) curve.emplace_back(part);
  if (curve.size() != rank) {
    throw fr::DomainError("curve", "expected " + std::to_string(rank) + " integers");
  }
  return curve;
}

// Word syntax: factors separated by ';', each "c1,...,c2g" with optional
// "^-1" suffix, e.g. "1,0;0,1^-1".
fr::TwistWord parse_word(const std::string& text, std::size_t genus) {
  fr::TwistWord word;
  word.genus = genus;
  if (text.empty()) return word;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    fr::TwistFactor factor;
    factor.exponent = 1;
    std::string body = part;
    if (auto pos = part.find('^'); pos != std::string::npos) {
      body = part.substr(0, pos);
      const std::string exp = part.substr(pos + 1);
      if (exp == "-1") {
        factor.exponent = -1;
      } else if (exp == "1" || exp == "+1") {
        factor.exponent = 1;
      } else {
        throw fr::DomainError("word", "twist exponent must be 1 or -1");
      }
    }
    factor.curve = parse_curve(body, 2 * genus);
    word.factors.push_back(std::move(factor));
  }
  return word;
}

// A one-form given as dF, dG, a coordinate differential, or canonical form
// text.
fr::DiffForm parse_form_spec(const std::string& text, const fr::VarSet& vars,
                             const std::optional<fr::CasimirPair>& pair) {
  if (text == "dF" || text == "dG") {
    if (!pair) {
      throw fr::DomainError("form", "dF/dG shorthand needs a bivector built from -F/-G");
    }
    const fr::Poly& p = text == "dF" ? pair->F : pair->G;
    return fr::derham_d(fr::DiffForm::from_function(p));
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (text == "d" + vars.name(i)) {
      fr::DiffForm form(vars, 1);
      form.add_term(fr::Mask(1) << i, fr::Poly::constant(vars, fr::Rat(1)));
      return form;
    }
  }
  // "dt^dx" style wedge of coordinate differentials.
  if (text.find('(') == std::string::npos && text.find('^') != std::string::npos) {
    std::vector<std::size_t> indices;
    std::stringstream ss(text);
    std::string part;
    bool all_coords = true;
    while (std::getline(ss, part, '^')) {
      bool found = false;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (part == "d" + vars.name(i)) {
          indices.push_back(i);
          found = true;
          break;
        }
      }
      if (!found) {
        all_coords = false;
        break;
      }
    }
    if (all_coords) {
      return fr::DiffForm::basis_element(vars, indices,
                                         fr::Poly::constant(vars, fr::Rat(1)));
    }
  }
  return fr::parse_diff_form(text, vars);
}

void emit(const fr::OrderedJson& body, bool text_mode) {
  if (text_mode) {
    for (const auto& [key, value] : body.items()) {
      std::cout << key << ": " << value.dump() << "\n";
    }
    return;
  }
  std::cout << body.dump(2) << "\n";
}

fr::OrderedJson with_schema() {
  fr::OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

void merge_into(fr::OrderedJson& doc, const fr::OrderedJson& body) {
  for (const auto& [key, value] : body.items()) doc[key] = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for singular Poisson structures on R^4 built from Casimir pairs"};
  app.require_subcommand(1);
  bool text_mode = false;
  app.add_flag("--text", text_mode, "human-readable key: value output instead of JSON");

  // --- bivector ---
  auto* cmd_bivector = app.add_subcommand("bivector", "build the Jacobian bivector from (F, G, k)");
  BivectorOptions bivector_opts;
  bivector_opts.add_to(cmd_bivector, /*require_pair=*/true);

  // --- jacobi ---
  auto* cmd_jacobi = app.add_subcommand("jacobi", "Jacobi identity check: [pi, pi]");
  BivectorOptions jacobi_opts;
  jacobi_opts.add_to(cmd_jacobi, /*require_pair=*/false);

  // --- casimir ---
  auto* cmd_casimir = app.add_subcommand("casimir", "test whether a function is a Casimir");
  BivectorOptions casimir_opts;
  casimir_opts.add_to(cmd_casimir, /*require_pair=*/false);
  std::string casimir_f;
  cmd_casimir->add_option("-f", casimir_f, "candidate Casimir expression")->required();

  // --- modular ---
  auto* cmd_modular = app.add_subcommand(
      "modular", "modular vector field: divergence definition and rot-formula cross-check");
  BivectorOptions modular_opts;
  modular_opts.add_to(cmd_modular, /*require_pair=*/false);

  // --- cohomology ---
  auto* cmd_cohomology =
      app.add_subcommand("cohomology", "truncated Poisson cohomology dimensions");
  BivectorOptions cohomology_opts;
  cohomology_opts.add_to(cmd_cohomology, /*require_pair=*/false);
  std::string weights_text;
  int cutoff = 0;
  std::size_t block_cap = fr::kDefaultBlockCap;
  cmd_cohomology->add_option("--weights", weights_text, "comma-separated positive weights");
  cmd_cohomology->add_option("--cutoff", cutoff, "maximum weighted degree")->required();
  cmd_cohomology->add_option("--cap", block_cap, "basis size cap per block");

  // --- locus ---
  auto* cmd_locus = app.add_subcommand("locus", "singular locus ideal and sample points");
  GermOptions locus_germ;
  locus_germ.add_to(cmd_locus);

  // --- classify ---
  auto* cmd_classify = app.add_subcommand("classify", "classify a singular point (fold/cusp/...)");
  GermOptions classify_germ;
  classify_germ.add_to(cmd_classify);
  std::string classify_point_text;
  cmd_classify->add_option("--point", classify_point_text, "point t,x,y,z")->required();

  // --- twist ---
  auto* cmd_twist = app.add_subcommand("twist", "Dehn twist transvection matrix on H^1");
  std::size_t twist_genus = 1;
  std::string twist_curve;
  cmd_twist->add_option("--genus", twist_genus, "genus g")->required();
  cmd_twist->add_option("--curve", twist_curve, "curve class, 2g integers")->required();

  // --- word ---
  auto* cmd_word = app.add_subcommand("word", "matrix of a twist word");
  std::size_t word_genus = 1;
  std::string word_text;
  cmd_word->add_option("--genus", word_genus, "genus g")->required();
  cmd_word->add_option("--word", word_text, "word: 'c1,..;c1,..^-1'")->required();

  // --- hurwitz ---
  auto* cmd_hurwitz = app.add_subcommand("hurwitz", "Hurwitz relation checks for (word; c)");
  std::size_t hurwitz_genus = 1;
  std::string hurwitz_word_text, hurwitz_curve;
  cmd_hurwitz->add_option("--genus", hurwitz_genus, "genus g")->required();
  cmd_hurwitz->add_option("--word", hurwitz_word_text, "twist word");
  cmd_hurwitz->add_option("--curve", hurwitz_curve, "reference curve class")->required();

  // --- monpi ---
  auto* cmd_monpi = app.add_subcommand(
      "monpi", "monodromy class in H^3: anchor image of the twisted Thom representative");
  BivectorOptions monpi_opts;
  monpi_opts.add_to(cmd_monpi, /*require_pair=*/false);
  std::string tau1_text, tau2_text, vols_text, base_point_text, alpha_text, monpi_word_text,
      basis_forms_text;
  std::size_t monpi_genus = 1;
  std::string cs_symbol = "c_S";
  cmd_monpi->add_option("--tau1", tau1_text, "first transverse covector (dF, dG, dt, ... or text)")
      ->required();
  cmd_monpi->add_option("--tau2", tau2_text, "second transverse covector")->required();
  cmd_monpi->add_option("--vol-s", vols_text, "leaf volume 2-form (e.g. 'dt^dx')")->required();
  cmd_monpi->add_option("--base-point", base_point_text, "tube base point t,x,y,z")->required();
  cmd_monpi->add_option("--genus", monpi_genus, "genus of the fiber")->required();
  cmd_monpi->add_option("--alpha", alpha_text, "H^1 class vector, 2g integers")->required();
  cmd_monpi->add_option("--word", monpi_word_text, "twist word acting on H^1");
  cmd_monpi->add_option("--basis-forms", basis_forms_text,
                        "one-forms realizing the H^1 basis, separated by '|'")
      ->required();
  cmd_monpi->add_option("--cs", cs_symbol, "name of the formal bump constant");

  // --- glue ---
  auto* cmd_glue = app.add_subcommand("glue", "verify region pieces glue over the base bivector");
  BivectorOptions glue_opts;
  glue_opts.add_to(cmd_glue, /*require_pair=*/false);
  std::vector<std::string> piece_texts;
  bool overlap_cu = false;
  cmd_glue->add_option("--piece", piece_texts, "piece as REGION=<multivector text>; repeatable");
  cmd_glue->add_flag("--overlap-cu", overlap_cu, "declare U_C and U_Gamma overlapping");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << "run with --help for the subcommand schema\n";
    return 2;
  }

  try {
    fr::OrderedJson doc = with_schema();

    if (cmd_bivector->parsed()) {
      fr::PoissonBivector pi = bivector_opts.build();
      merge_into(doc, fr::bivector_json(pi));
      emit(doc, text_mode);
    } else if (cmd_jacobi->parsed()) {
      fr::PoissonBivector pi = jacobi_opts.build();
      fr::Multivector obstruction = fr::jacobi_check(pi);
      doc["is_poisson"] = obstruction.is_zero();
      doc["obstruction"] = fr::blade_terms_json(obstruction);
      emit(doc, text_mode);
    } else if (cmd_casimir->parsed()) {
      fr::PoissonBivector pi = casimir_opts.build();
      fr::Poly f = fr::Poly::parse(casimir_f, casimir_opts.vars());
      doc["is_casimir"] = fr::is_casimir(pi, f);
      emit(doc, text_mode);
    } else if (cmd_modular->parsed()) {
      fr::PoissonBivector pi = modular_opts.build();
      fr::VolumeForm mu = modular_opts.volume();
      fr::RationalVectorField z = fr::modular_vf(pi, mu);
      doc["volume"] = {{"k", mu.factor().to_string()}, {"nonvanishing", mu.status_label()}};
      doc["definition"] = fr::rational_vf_json(z);
      doc["definition_is_zero"] = z.is_zero();
      try {
        fr::Multivector rot = fr::modular_rot_formula(pi, mu);
        doc["rot_formula"] = fr::blade_terms_json(rot);
        bool agree = true;
        for (std::size_t i = 0; i < pi.vars().size(); ++i) {
          fr::RationalFn ri(rot.coefficient(fr::Mask(1) << i));
          if (!(ri == z.components[i])) {
            agree = false;
            break;
          }
        }
        doc["agree"] = agree;
      } catch (const fr::DomainError& e) {
        doc["rot_formula"] = nullptr;
        doc["rot_formula_note"] = e.what();
        doc["agree"] = nullptr;
      }
      emit(doc, text_mode);
    } else if (cmd_cohomology->parsed()) {
      fr::PoissonBivector pi = cohomology_opts.build();
      std::vector<int> weights;
      if (weights_text.empty()) {
        weights.assign(pi.vars().size(), 1);
      } else {
        std::stringstream ss(weights_text);
        std::string part;
        while (std::getline(ss, part, ',')) weights.push_back(std::stoi(part));
      }
      fr::CohomologyReport report =
          fr::cohomology_dims(pi, fr::WeightVector(weights), cutoff, block_cap);
      merge_into(doc, fr::cohomology_report_json(report));
      emit(doc, text_mode);
    } else if (cmd_locus->parsed()) {
      fr::MapGerm germ = locus_germ.build();
      fr::OrderedJson germ_doc;
      germ_doc["kind"] = fr::germ_kind_name(germ.kind);
      if (germ.parameter) {
        germ_doc["s"] = fr::rat_to_string(*germ.parameter);
      } else {
        germ_doc["s"] = nullptr;
      }
      germ_doc["f1"] = germ.f1.to_string();
      germ_doc["f2"] = germ.f2.to_string();
      doc["germ"] = std::move(germ_doc);
      fr::SingularLocus locus = fr::singular_locus(germ);
      merge_into(doc, fr::locus_json(locus));
      emit(doc, text_mode);
    } else if (cmd_classify->parsed()) {
      fr::MapGerm germ = classify_germ.build();
      auto point = parse_point(classify_point_text, germ.f1.vars().size());
      doc["class"] = fr::to_string(fr::classify_point(germ, point));
      emit(doc, text_mode);
    } else if (cmd_twist->parsed()) {
      fr::H1Lattice lattice{twist_genus};
      doc["matrix"] =
          fr::zmatrix_json(fr::dehn_twist_matrix(lattice, parse_curve(twist_curve, 2 * twist_genus)));
      emit(doc, text_mode);
    } else if (cmd_word->parsed()) {
      doc["matrix"] = fr::zmatrix_json(fr::word_matrix(parse_word(word_text, word_genus)));
      emit(doc, text_mode);
    } else if (cmd_hurwitz->parsed()) {
      fr::HurwitzReport report = fr::hurwitz_check(parse_word(hurwitz_word_text, hurwitz_genus),
                                                   parse_curve(hurwitz_curve, 2 * hurwitz_genus));
      doc["fixes_c"] = report.fixes_c;
      doc["equals_pm_twist_c"] = report.equals_pm_twist_c;
      emit(doc, text_mode);
    } else if (cmd_monpi->parsed()) {
      fr::PoissonBivector pi = monpi_opts.build();
      const fr::VarSet vs = monpi_opts.vars();
      const std::optional<fr::CasimirPair>& prov = pi.provenance();
      fr::DiffForm tau1 = parse_form_spec(tau1_text, vs, prov);
      fr::DiffForm tau2 = parse_form_spec(tau2_text, vs, prov);
      fr::DiffForm vol_s = parse_form_spec(vols_text, vs, prov);
      fr::LeafTubeData tube = fr::make_leaf_tube(tau1, tau2, vol_s,
                                                 parse_point(base_point_text, vs.size()), cs_symbol);
      fr::CurveClass alpha = parse_curve(alpha_text, 2 * monpi_genus);
      fr::ZMatrix mono = fr::word_matrix(parse_word(monpi_word_text, monpi_genus));
      std::vector<fr::DiffForm> basis_forms;
      {
        std::stringstream ss(basis_forms_text);
        std::string part;
        while (std::getline(ss, part, '|')) basis_forms.push_back(parse_form_spec(part, vs, prov));
      }
      fr::FormalMultivector result = fr::mon_pi(pi, tube, alpha, mono, basis_forms);
      doc["result"] = fr::formal_multivector_json(result);
      emit(doc, text_mode);
    } else if (cmd_glue->parsed()) {
      fr::PoissonBivector base = glue_opts.build();
      std::vector<std::pair<std::string, fr::PoissonBivector>> pieces;
      for (const std::string& text : piece_texts) {
        auto pos = text.find('=');
        if (pos == std::string::npos) {
          throw fr::DomainError("glue", "piece syntax is REGION=<multivector text>");
        }
        fr::Multivector body = fr::parse_multivector(text.substr(pos + 1), glue_opts.vars());
        if (body.grade() != 2) throw fr::DomainError("glue", "piece must have grade 2");
        pieces.emplace_back(text.substr(0, pos), fr::PoissonBivector(std::move(body)));
      }
      fr::RegionWeights weights;
      weights.uc_ugamma_disjoint = !overlap_cu;
      fr::GlueReport report = fr::region_glue_check(pieces, base, weights);
      merge_into(doc, fr::glue_report_json(report));
      emit(doc, text_mode);
    }
    return 0;
  } catch (const fr::DomainError& e) {
    fr::OrderedJson doc = with_schema();
    doc["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    fr::OrderedJson doc = with_schema();
    doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    return 1;
  }
}
