// Acceptance suite: every check below is an exact-arithmetic identity
// (tolerance is literally zero). One line per criterion; exit code is the
// number of failed criteria. Invocation: frp_acceptance <frp-binary> <golden-dir>.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frpoisson/mapping_class.hpp"
#include "test_support.hpp"

using namespace frpoisson;
namespace ft = frp_test;

namespace {

const VarSet kVars = VarSet::r4();
Poly P(const std::string& text) { return Poly::parse(text, kVars); }

struct Criterion {
  int number;
  std::string label;
  bool pass = true;
  std::vector<std::string> notes;

  Criterion(int n, std::string text) : number(n), label(std::move(text)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

DiffForm dx_form(std::size_t i) {
  DiffForm f(kVars, 1);
  f.add_term(Mask(1) << i, Poly::constant(kVars, Rat(1)));
  return f;
}

// 1. Jacobi identity over the catalog
Criterion criterion_jacobi() {
  Criterion c{1, "Jacobi identity [pi,pi] = 0 on the Casimir-pair catalog"};
  int count = 0;
  for (const auto& [name, pair] : ft::catalog_pairs()) {
    c.require(jacobi_check(build_fr_bivector(pair)).is_zero(), "[pi,pi] != 0 for " + name);
    ++count;
  }
  c.note(std::to_string(count) + " structures checked exactly");
  return c;
}

// 2. Casimir annihilation
Criterion criterion_casimirs() {
  Criterion c{2, "Casimir annihilation pibar(dF) = pibar(dG) = 0"};
  for (const auto& [name, pair] : ft::catalog_pairs()) {
    PoissonBivector pi = build_fr_bivector(pair);
    c.require(anchor_push(pi, derham_d(DiffForm::from_function(pair.F))).is_zero(),
              "pibar(dF) != 0 for " + name);
    c.require(anchor_push(pi, derham_d(DiffForm::from_function(pair.G))).is_zero(),
              "pibar(dG) != 0 for " + name);
    c.require(is_casimir(pi, pair.F) && is_casimir(pi, pair.G),
              "is_casimir rejects a construction Casimir for " + name);
  }
  return c;
}

// 3. Unimodularity, with the rot-formula cross-check where it applies
Criterion criterion_unimodular() {
  Criterion c{3, "unimodularity: modular field vanishes for mu = (1/k) vol"};
  int disagreements = 0;
  for (const auto& [name, pair] : ft::catalog_pairs()) {
    PoissonBivector pi = build_fr_bivector(pair);
    RationalVectorField z = modular_vf(pi, pair.mu);
    c.require(z.is_zero(), "modular field nonzero for " + name);
    bool normal_position = true;
    for (std::size_t j = 1; j < 4; ++j) {
      if (!pi.entry(0, j).is_zero()) normal_position = false;
    }
    if (!normal_position) continue;
    Multivector rot = modular_rot_formula(pi, pair.mu);
    if (pair.k.is_constant()) {
      c.require(rot.is_zero(), "rot formula nonzero for constant k on " + name);
    } else if (!rot.is_zero()) {
      ++disagreements;  // reported as a finding, never corrected
    }
  }
  if (disagreements > 0) {
    c.note("finding: the printed rot formula disagrees with the divergence definition on " +
           std::to_string(disagreements) +
           " structures with non-constant k (its d log|k| term); reported, not corrected");
  }
  return c;
}

// 4. Chain map
Criterion criterion_chain_map() {
  Criterion c{4, "chain map pibar(d eta) = -[pi, pibar(eta)] on 50 random forms x 3 structures"};
  std::mt19937 rng(20240917);
  std::vector<std::pair<std::string, PoissonBivector>> structures;
  structures.emplace_back("fold", build_fr_bivector(casimir_pair_from_strings(
                                      "t", "-x^2+y^2+z^2", "1", kVars)));
  structures.emplace_back("cusp(k=1+x^2)",
                          build_fr_bivector(casimir_pair_from_strings(
                              "t", "x^3+t*x+y^2-z^2", "1+x^2", kVars)));
  structures.emplace_back("lefschetz(k=2)",
                          build_fr_bivector(casimir_pair_from_strings(
                              "t^2-x^2+y^2-z^2", "2*t*x+2*y*z", "2", kVars)));
  for (const auto& [name, pi] : structures) {
    for (int i = 0; i < 50; ++i) {
      std::uniform_int_distribution<int> g(0, 2);
      DiffForm eta = ft::random_form(rng, kVars, g(rng));
      Multivector lhs = anchor_push(pi, derham_d(eta));
      Multivector rhs = schouten(pi.body(), anchor_push(pi, eta));
      c.require((lhs + rhs).is_zero(), "chain map fails on " + name);
    }
  }
  return c;
}

// 5. Cohomology oracle equivalence
Criterion criterion_cohomology() {
  Criterion c{5, "cohomology: kernel dims match brute force; d_pi o d_pi = 0 blockwise"};
  const WeightVector w = WeightVector::uniform(4);

  Multivector xy(kVars, 2);
  xy.add_term((Mask(1) << 1) | (Mask(1) << 2), P("1"));
  PoissonBivector pi_xy(xy);
  CohomologyReport report = cohomology_dims(pi_xy, w, 1);
  long h0 = 0;
  for (const BlockDims& b : report.blocks) {
    if (b.p == 0) h0 += b.ker;
  }
  c.require(h0 == 3, "H^0 of dx^dy in degrees <= 1 is not 3-dimensional");
  c.require(h0 == ft::casimir_dimension_oracle(pi_xy, w, 1),
            "engine H^0 disagrees with the brute-force null space");

  // kernel basis is {1, t, z}: check t and z lie in the degree-1 kernel and
  // x, y do not
  GradedBlock block = complex_block(pi_xy, w, 0, 1);
  auto column_of = [&](const Exponents& e) {
    for (std::size_t col = 0; col < block.source_basis.size(); ++col) {
      if (block.source_basis[col].exponents == e) return col;
    }
    return std::size_t(99);
  };
  auto column_is_killed = [&](const Exponents& e) {
    const std::size_t col = column_of(e);
    for (std::size_t row = 0; row < block.matrix.rows(); ++row) {
      if (!is_zero(block.matrix.at(row, col))) return false;
    }
    return true;
  };
  c.require(column_is_killed(Exponents{1, 0, 0, 0}), "t not in ker d_pi");
  c.require(column_is_killed(Exponents{0, 0, 0, 1}), "z not in ker d_pi");
  c.require(!column_is_killed(Exponents{0, 1, 0, 0}), "x unexpectedly in ker d_pi");

  // fold: every monomial F^a G^b within the cutoff is in the kernel
  PoissonBivector fold =
      build_fr_bivector(casimir_pair_from_strings("t", "-x^2+y^2+z^2", "1", kVars));
  const int cutoff = 4;
  long fg_count = 0;
  for (int a = 0; a <= cutoff; ++a) {
    for (int b = 0; a + 2 * b <= cutoff; ++b) {
      Poly fg = P("t").pow(a) * P("-x^2+y^2+z^2").pow(b);
      c.require(lichnerowicz_d(fold, Multivector::from_function(fg)).is_zero(),
                "d_pi(F^aG^b) != 0");
      ++fg_count;
    }
  }
  CohomologyReport fold_report = cohomology_dims(fold, w, cutoff);
  long fold_h0 = 0;
  for (const BlockDims& b : fold_report.blocks) {
    if (b.p == 0) fold_h0 += b.ker;
  }
  c.require(fold_h0 >= fg_count, "kernel smaller than the F^aG^b count");
  c.note("fold kernel dim " + std::to_string(fold_h0) + " >= " + std::to_string(fg_count) +
         " Casimir monomials");

  // block composition vanishes
  for (const PoissonBivector& pi : {fold, pi_xy}) {
    for (int p = 0; p <= 3; ++p) {
      for (int d = -2; d <= 2; ++d) {
        GradedBlock first = complex_block(pi, w, p, d);
        GradedBlock second = complex_block(pi, w, p + 1, d + first.shift);
        for (std::size_t col = 0; col < first.matrix.cols(); ++col) {
          for (std::size_t row = 0; row < second.matrix.rows(); ++row) {
            Rat acc(0);
            for (std::size_t mid = 0; mid < first.matrix.rows(); ++mid) {
              acc += second.matrix.at(row, mid) * first.matrix.at(mid, col);
            }
            if (!is_zero(acc)) {
              c.require(false, "d_pi o d_pi != 0 at (p=" + std::to_string(p) +
                                   ", d=" + std::to_string(d) + ")");
            }
          }
        }
      }
    }
  }
  return c;
}

// 6. Singular loci and classification
Criterion criterion_loci() {
  Criterion c{6, "singular loci and pointwise classification of the canonical germs"};

  SingularLocus fold_locus = singular_locus(normal_form(GermKind::Fold, "-++"));
  c.require(fold_locus.sample_points.size() == 7, "fold locus sample count");
  for (const auto& p : fold_locus.sample_points) {
    c.require(is_zero(p[1]) && is_zero(p[2]) && is_zero(p[3]), "fold sample off the t-axis");
  }
  // generators vanish identically on the whole axis, not only on samples
  for (const Poly& g : fold_locus.generators) {
    Poly restricted = g;  // x = y = z = 0
    for (std::size_t v = 1; v < 4; ++v) restricted = restricted.substituted(v, Poly::zero(kVars));
    c.require(restricted.is_zero(), "fold generator nonzero on the t-axis");
  }

  SingularLocus lef_locus = singular_locus(normal_form(GermKind::Lefschetz));
  c.require(lef_locus.sample_points.size() == 1 &&
                lef_locus.sample_points[0] == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)},
            "lefschetz locus is not just the origin");

  SingularLocus circle = singular_locus(lekili_move(GermKind::Birth, Rat(1)));
  c.require(!circle.sample_points.empty(), "birth(s=1) found no circle points");
  for (const auto& p : circle.sample_points) {
    c.require(p[0] * p[0] + p[1] * p[1] == Rat(1) && is_zero(p[2]) && is_zero(p[3]),
              "birth(s=1) sample off the circle x^2 + t^2 = 1");
  }

  SingularLocus empty = singular_locus(lekili_move(GermKind::Birth, Rat(-1)));
  c.require(empty.sample_points.empty(), "birth(s=-1) locus should be empty");
  bool positive_generator = false;
  for (const Poly& g : empty.generators) {
    if (!g.is_zero() && VolumeForm::pattern_nonvanishing(g)) positive_generator = true;
  }
  c.require(positive_generator, "birth(s=-1) has no certified-positive generator");

  const std::vector<Rat> origin{Rat(0), Rat(0), Rat(0), Rat(0)};
  c.require(classify_point(normal_form(GermKind::Fold, "-++"),
                           {Rat(1), Rat(0), Rat(0), Rat(0)}) == SingularityClass::Fold,
            "fold germ not classified as fold");
  c.require(classify_point(normal_form(GermKind::Cusp, "+-"), origin) == SingularityClass::Cusp,
            "cusp germ not classified as cusp at the origin");
  c.require(classify_point(normal_form(GermKind::Lefschetz), origin) ==
                SingularityClass::LefschetzDegenerate,
            "lefschetz germ not rank-degenerate at the origin");
  return c;
}

// 7. Mapping-class algebra
Criterion criterion_mapping_class() {
  Criterion c{7, "mapping-class algebra: symplectic twists, braid/commutation, genus maps"};
  std::mt19937 rng(20240918);
  std::uniform_int_distribution<int> entry(-3, 3);
  auto random_primitive = [&](std::size_t genus) {
    while (true) {
      CurveClass v;
      for (std::size_t i = 0; i < 2 * genus; ++i) v.emplace_back(entry(rng));
      if (is_primitive(v)) return v;
    }
  };

  int pairs_checked = 0;
  for (std::size_t genus = 1; genus <= 3 && pairs_checked < 100; ++genus) {
    H1Lattice lattice{genus};
    const ZMatrix j = lattice.intersection_form();
    for (int i = 0; i < 40 && pairs_checked < 100; ++i) {
      CurveClass a = random_primitive(genus);
      CurveClass b = random_primitive(genus);
      ZMatrix ta = dehn_twist_matrix(lattice, a);
      ZMatrix tb = dehn_twist_matrix(lattice, b);
      c.require(ta.transposed() * j * ta == j, "twist matrix not symplectic");
      const Int pairing = intersection(lattice, a, b);
      if (pairing == 1 || pairing == -1) {
        c.require(ta * tb * ta == tb * ta * tb, "braid relation fails");
      } else if (sgn(pairing) == 0) {
        c.require(ta * tb == tb * ta, "disjoint classes fail to commute");
      }
      ++pairs_checked;
    }
  }
  c.note(std::to_string(pairs_checked) + " random primitive pairs checked");

  for (std::size_t genus = 1; genus <= 3; ++genus) {
    LatticeMap inc = genus_increase(H1Lattice{genus});
    CurveClass handle_a(2 * genus + 2, Int(0));
    handle_a[2 * genus] = 1;
    LatticeMap red = genus_reduction(H1Lattice{genus + 1}, handle_a);
    c.require(red.matrix * inc.matrix == ZMatrix::identity(2 * genus),
              "reduction does not undo inclusion at genus " + std::to_string(genus));
  }

  CurveClass cc{Int(1), Int(0)};
  HurwitzReport hurwitz = hurwitz_check(TwistWord{1, {{cc, 1}}}, cc);
  c.require(hurwitz.fixes_c && hurwitz.equals_pm_twist_c, "hurwitz_check fails on (T_c; c)");
  return c;
}

// 8. Thom / Mon_pi pipeline
Criterion criterion_thom_monpi() {
  Criterion c{8, "Thom images and Mon_pi: zero on Casimir tubes, frozen on the symplectic model"};
  CasimirPair pair = casimir_pair_from_strings("t", "-x^2+y^2+z^2", "1", kVars);
  PoissonBivector fold = build_fr_bivector(pair);
  LeafTubeData fr_tube = make_leaf_tube(
      derham_d(DiffForm::from_function(pair.F)), derham_d(DiffForm::from_function(pair.G)),
      wedge(dx_form(2), dx_form(3)), {Rat(0), Rat(1), Rat(0), Rat(0)});
  c.require(poincare_dual_image(fold, fr_tube).body.is_zero(),
            "Poincare-dual image nonzero on the Casimir tube");
  std::mt19937 rng(20240919);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<DiffForm> basis_forms{dx_form(0), dx_form(1)};
  for (int i = 0; i < 8; ++i) {
    std::vector<Int> alpha{Int(entry(rng)), Int(entry(rng))};
    TwistWord word{1, {{CurveClass{Int(1), Int(0)}, 1}}};
    c.require(mon_pi(fold, fr_tube, alpha, word_matrix(word), basis_forms).body.is_zero(),
              "Mon_pi nonzero on the Casimir tube");
  }
  c.note("finding: Mon_pi representatives vanish identically on tubes with transverse (dF, dG)");

  Multivector model_body(kVars, 2);
  model_body.add_term((Mask(1) << 0) | (Mask(1) << 1), P("1"));
  model_body.add_term((Mask(1) << 2) | (Mask(1) << 3), P("1"));
  PoissonBivector model(model_body);
  LeafTubeData tube = make_leaf_tube(dx_form(2), dx_form(3), wedge(dx_form(0), dx_form(1)),
                                     {Rat(0), Rat(0), Rat(0), Rat(0)});
  Multivector expected2(kVars, 2);
  expected2.add_term((Mask(1) << 2) | (Mask(1) << 3), P("1"));
  c.require(poincare_dual_image(model, tube).body == expected2,
            "symplectic-model Poincare image differs from the frozen oracle value");
  Multivector expected4(kVars, 4);
  expected4.add_term((Mask(1) << 0) | (Mask(1) << 1) | (Mask(1) << 2) | (Mask(1) << 3), P("1"));
  c.require(thom_top_image(model, tube).body == expected4,
            "symplectic-model top image differs from the frozen oracle value");
  Multivector expected3(kVars, 3);
  expected3.add_term((Mask(1) << 1) | (Mask(1) << 2) | (Mask(1) << 3), P("-1"));
  ZMatrix twist(2, 2);
  twist.at(0, 0) = 1;
  twist.at(0, 1) = -1;
  twist.at(1, 1) = 1;
  c.require(mon_pi(model, tube, {Int(1), Int(0)}, twist, basis_forms).body == expected3,
            "symplectic-model Mon_pi differs from the frozen oracle value");

  // functoriality on 20 random words at genus <= 2
  for (std::size_t genus = 1; genus <= 2; ++genus) {
    std::vector<DiffForm> forms;
    for (std::size_t i = 0; i < 2 * genus; ++i) forms.push_back(dx_form(i % 4));
    auto random_word = [&]() {
      TwistWord w{genus, {}};
      std::uniform_int_distribution<int> len(1, 4), expo(0, 1);
      for (int f = 0, n = len(rng); f < n; ++f) {
        while (true) {
          CurveClass curve;
          for (std::size_t k = 0; k < 2 * genus; ++k) curve.emplace_back(entry(rng));
          if (is_primitive(curve)) {
            w.factors.push_back({curve, expo(rng) == 0 ? 1 : -1});
            break;
          }
        }
      }
      return w;
    };
    for (int i = 0; i < 10; ++i) {
      TwistWord w1 = random_word(), w2 = random_word();
      ZMatrix m1 = word_matrix(w1), m2 = word_matrix(w2);
      std::vector<Int> alpha;
      for (std::size_t k = 0; k < 2 * genus; ++k) alpha.emplace_back(entry(rng));
      FormalMultivector lhs = mon_pi(model, tube, alpha, m1 * m2, forms);
      FormalMultivector rhs = mon_pi(model, tube, m2.apply(alpha), m1, forms);
      c.require(lhs.body == rhs.body, "Mon_pi functoriality fails");
    }
  }
  return c;
}

// 9. CLI determinism against golden files
Criterion criterion_cli(const std::string& cli, const std::string& golden_dir) {
  Criterion c{9, "CLI determinism: golden JSON byte-identical across 3 runs"};
  struct Example {
    std::string args;
    std::string golden;
  };
  const std::array<Example, 3> examples = {
      Example{"bivector -F \"t\" -G \"-x^2+y^2+z^2\" -k \"1\"", "bivector_fold.json"},
      Example{"jacobi -F \"t\" -G \"-x^2+y^2+z^2\" -k \"1\"", "jacobi_fold.json"},
      Example{"twist --genus 1 --curve \"1,0\"", "twist_g1.json"},
  };
  auto run = [&](const std::string& args) {
    std::string out;
    FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return std::string();
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    pclose(pipe);
    return out;
  };
  for (const Example& example : examples) {
    const std::string first = run(example.args);
    c.require(!first.empty(), "no output from: " + example.args);
    for (int i = 0; i < 2; ++i) {
      c.require(run(example.args) == first, "output drifted across runs: " + example.args);
    }
    std::ifstream golden(golden_dir + "/" + example.golden);
    std::stringstream buffer;
    buffer << golden.rdbuf();
    c.require(golden.good(), "missing golden file " + example.golden);
    c.require(buffer.str() == first, "output differs from golden " + example.golden);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: frp_acceptance <frp-binary> <golden-dir>\n";
    return 64;
  }
  std::vector<Criterion> criteria;
  criteria.push_back(criterion_jacobi());
  criteria.push_back(criterion_casimirs());
  criteria.push_back(criterion_unimodular());
  criteria.push_back(criterion_chain_map());
  criteria.push_back(criterion_cohomology());
  criteria.push_back(criterion_loci());
  criteria.push_back(criterion_mapping_class());
  criteria.push_back(criterion_thom_monpi());
  criteria.push_back(criterion_cli(argv[1], argv[2]));

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.label
              << "\n";
    for (const std::string& note : c.notes) std::cout << "      " << note << "\n";
    if (!c.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed;
}
