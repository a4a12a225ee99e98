#include <doctest.h>

#include "test_support.hpp"

using namespace frpoisson;
using frp_test::random_form;
using frp_test::random_poly;

namespace {
const VarSet kVars = VarSet::r4();
Poly P(const std::string& text) { return Poly::parse(text, kVars); }

Multivector partial(std::size_t i) {
  Multivector m(kVars, 1);
  m.add_term(Mask(1) << i, Poly::constant(kVars, Rat(1)));
  return m;
}

DiffForm dx_form(std::size_t i) {
  DiffForm f(kVars, 1);
  f.add_term(Mask(1) << i, Poly::constant(kVars, Rat(1)));
  return f;
}

PoissonBivector xy_bivector() {
  Multivector body(kVars, 2);
  body.add_term((Mask(1) << 1) | (Mask(1) << 2), P("1"));
  return PoissonBivector(body);
}

PoissonBivector fold_bivector() {
  return build_fr_bivector(casimir_pair_from_strings("t", "-x^2+y^2+z^2", "1", kVars));
}

PoissonBivector symplectic_model() {
  Multivector body(kVars, 2);
  body.add_term((Mask(1) << 0) | (Mask(1) << 1), P("1"));
  body.add_term((Mask(1) << 2) | (Mask(1) << 3), P("1"));
  return PoissonBivector(body);
}

long kernel_total_p0(const CohomologyReport& report) {
  long total = 0;
  for (const BlockDims& b : report.blocks) {
    if (b.p == 0) total += b.ker;
  }
  return total;
}
}  // namespace

TEST_CASE("lichnerowicz differential basics") {
  PoissonBivector fold = fold_bivector();
  CHECK(lichnerowicz_d(fold, Multivector::from_function(P("t"))).is_zero());
  CHECK(lichnerowicz_d(fold, fold.body()).is_zero());

  // d_pi(f) = -X_f under the fixed convention, probed on f = x with dt^dx
  Multivector body(kVars, 2);
  body.add_term((Mask(1) << 0) | (Mask(1) << 1), P("1"));
  PoissonBivector tx(body);
  Multivector expected = hamiltonian_vf(tx, P("x")).scaled(Rat(-1));
  CHECK(lichnerowicz_d(tx, Multivector::from_function(P("x"))) == expected);
  CHECK(expected == partial(0).scaled(Rat(-1)));
}

TEST_CASE("block at grade 0 degree 0 is the constants") {
  GradedBlock block = complex_block(xy_bivector(), WeightVector::uniform(4), 0, 0);
  REQUIRE(block.source_basis.size() == 1);
  CHECK(block.source_basis[0].mask == 0);
  CHECK(block.matrix.cols() == 1);
  CHECK(block.matrix.rank() == 0);
}

TEST_CASE("block kernel of dx^dy at grade 0 degree 1 is spanned by t and z") {
  GradedBlock block = complex_block(xy_bivector(), WeightVector::uniform(4), 0, 1);
  REQUIRE(block.source_basis.size() == 4);
  CHECK(block.matrix.cols() == 4);
  CHECK(block.matrix.rank() == 2);
  auto kernel = block.matrix.nullspace();
  REQUIRE(kernel.size() == 2);
  // identify which basis columns are t and z
  std::size_t col_t = 99, col_z = 99;
  for (std::size_t c = 0; c < block.source_basis.size(); ++c) {
    if (block.source_basis[c].exponents == Exponents{1, 0, 0, 0}) col_t = c;
    if (block.source_basis[c].exponents == Exponents{0, 0, 0, 1}) col_z = c;
  }
  REQUIRE(col_t != 99);
  REQUIRE(col_z != 99);
  for (const auto& v : kernel) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c != col_t && c != col_z) CHECK(is_zero(v[c]));
    }
  }
}

TEST_CASE("zero structure gives zero matrices at every block") {
  PoissonBivector zero{Multivector::zero(kVars, 2)};
  for (int p = 0; p <= 2; ++p) {
    for (int d = -2; d <= 2; ++d) {
      GradedBlock block = complex_block(zero, WeightVector::uniform(4), p, d);
      CHECK(block.matrix.rank() == 0);
      CHECK_FALSE(block.filtration);
      CHECK(block.shift == 0);
    }
  }
}

TEST_CASE("block basis cap raises") {
  CHECK_THROWS_AS(complex_block(fold_bivector(), WeightVector::uniform(4), 2, 4, 5),
                  DomainError);
}

TEST_CASE("consecutive block matrices compose to zero") {
  const WeightVector w = WeightVector::uniform(4);
  for (PoissonBivector pi : {fold_bivector(), xy_bivector(),
                             build_fr_bivector(casimir_pair_from_strings(
                                 "t^2-x^2+y^2-z^2", "2*t*x+2*y*z", "1", kVars))}) {
    for (int p = 0; p <= 2; ++p) {
      for (int d = -1; d <= 2; ++d) {
        GradedBlock first = complex_block(pi, w, p, d);
        GradedBlock second = complex_block(pi, w, p + 1, d + first.shift);
        REQUIRE(second.matrix.cols() == first.matrix.rows());
        for (std::size_t col = 0; col < first.matrix.cols(); ++col) {
          for (std::size_t row = 0; row < second.matrix.rows(); ++row) {
            Rat acc(0);
            for (std::size_t mid = 0; mid < first.matrix.rows(); ++mid) {
              acc += second.matrix.at(row, mid) * first.matrix.at(mid, col);
            }
            CHECK(is_zero(acc));
          }
        }
      }
    }
  }
}

TEST_CASE("zero structure: cohomology equals the whole space") {
  PoissonBivector zero{Multivector::zero(kVars, 2)};
  CohomologyReport report = cohomology_dims(zero, WeightVector::uniform(4), 2);
  // full dims: C(4,p) independent blades x monomials of the matching degree
  auto monomials_of_degree = [](int d) {
    // number of degree-d monomials in 4 variables
    if (d < 0) return 0L;
    return static_cast<long>((d + 1) * (d + 2) * (d + 3) / 6);
  };
  const long binom[5] = {1, 4, 6, 4, 1};
  for (const BlockDims& b : report.blocks) {
    CHECK(b.im == 0);
    CHECK(b.h == b.ker);
    long expected = 0;
    if (b.p == 0) {
      expected = monomials_of_degree(b.d);
    } else if (b.p == 1) {
      expected = binom[1] * monomials_of_degree(b.d + 1);
    } else {
      // mixed weights are uniform so every blade drops the same amount
      expected = binom[b.p] * monomials_of_degree(b.d + b.p);
    }
    CHECK(b.ker == expected);
  }
}

TEST_CASE("H^0 of dx^dy in degrees <= 1 is three-dimensional") {
  CohomologyReport report = cohomology_dims(xy_bivector(), WeightVector::uniform(4), 1);
  CHECK(kernel_total_p0(report) == 3);  // {1, t, z}
  CHECK(report.flags.empty());
}

TEST_CASE("H^0 agrees with the brute-force Casimir solver") {
  const WeightVector w = WeightVector::uniform(4);
  for (int cutoff : {1, 2, 3}) {
    CHECK(kernel_total_p0(cohomology_dims(xy_bivector(), w, cutoff)) ==
          frp_test::casimir_dimension_oracle(xy_bivector(), w, cutoff));
    CHECK(kernel_total_p0(cohomology_dims(fold_bivector(), w, cutoff)) ==
          frp_test::casimir_dimension_oracle(fold_bivector(), w, cutoff));
  }
}

TEST_CASE("monomials in the Casimirs lie in the kernel of d_pi") {
  PoissonBivector fold = fold_bivector();
  const Poly F = P("t");
  const Poly G = P("-x^2+y^2+z^2");
  const int cutoff = 4;
  long count = 0;
  for (int a = 0; a <= cutoff; ++a) {
    for (int b = 0; a + 2 * b <= cutoff; ++b) {
      Poly fg = F.pow(a) * G.pow(b);
      CHECK(lichnerowicz_d(fold, Multivector::from_function(fg)).is_zero());
      ++count;
    }
  }
  CHECK(count == 9);
  CHECK(kernel_total_p0(cohomology_dims(fold, WeightVector::uniform(4), cutoff)) >= count);
}

TEST_CASE("non-homogeneous structures fall back to filtration levels") {
  PoissonBivector cusp =
      build_fr_bivector(casimir_pair_from_strings("t", "x^3+t*x+y^2-z^2", "1", kVars));
  CohomologyReport report = cohomology_dims(cusp, WeightVector::uniform(4), 2);
  REQUIRE(report.flags.size() == 1);
  CHECK(report.flags[0] ==
        "pi not weighted-homogeneous: report is per-filtration-level, not graded");
  // composition still vanishes in filtration mode
  GradedBlock b0 = complex_block(cusp, WeightVector::uniform(4), 0, 2);
  CHECK(b0.filtration);
  GradedBlock b1 = complex_block(cusp, WeightVector::uniform(4), 1, 2 + b0.shift);
  for (std::size_t col = 0; col < b0.matrix.cols(); ++col) {
    for (std::size_t row = 0; row < b1.matrix.rows(); ++row) {
      Rat acc(0);
      for (std::size_t mid = 0; mid < b0.matrix.rows(); ++mid) {
        acc += b1.matrix.at(row, mid) * b0.matrix.at(mid, col);
      }
      CHECK(is_zero(acc));
    }
  }
  // every h dimension is non-negative
  for (const BlockDims& b : report.blocks) CHECK(b.h >= 0);
}

TEST_CASE("cohomology_dims rejects non-Poisson input") {
  Multivector bad = fold_bivector().body();
  bad.add_term((Mask(1) << 0) | (Mask(1) << 2), P("1"));
  CHECK_THROWS_AS(cohomology_dims(PoissonBivector(bad), WeightVector::uniform(4), 1),
                  DomainError);
}

TEST_CASE("closed forms push to d_pi-closed multivectors") {
  std::mt19937 rng(400);
  PoissonBivector fold = fold_bivector();
  for (int grade = 0; grade <= 1; ++grade) {
    for (int i = 0; i < 20; ++i) {
      DiffForm closed = derham_d(random_form(rng, kVars, grade));
      CHECK(lichnerowicz_d(fold, anchor_push(fold, closed)).is_zero());
    }
  }
}

TEST_CASE("leaf tubes validate their transverse pair") {
  std::vector<Rat> base{Rat(0), Rat(1), Rat(0), Rat(0)};
  CHECK_THROWS_AS(
      make_leaf_tube(dx_form(2), dx_form(2).scaled(Rat(2)), wedge(dx_form(0), dx_form(1)), base),
      DomainError);
  CHECK_THROWS_AS(
      make_leaf_tube(dx_form(2), wedge(dx_form(0), dx_form(1)), wedge(dx_form(0), dx_form(1)),
                     base),
      DomainError);
}

TEST_CASE("Poincare-dual image vanishes on Casimir tubes and is fixed on the symplectic model") {
  // FR tube: transverse pair (dF, dG) at a regular base point
  CasimirPair pair = casimir_pair_from_strings("t", "-x^2+y^2+z^2", "1", kVars);
  PoissonBivector fold = build_fr_bivector(pair);
  LeafTubeData fr_tube = make_leaf_tube(
      derham_d(DiffForm::from_function(pair.F)), derham_d(DiffForm::from_function(pair.G)),
      wedge(dx_form(2), dx_form(3)), {Rat(0), Rat(1), Rat(0), Rat(0)});
  CHECK(poincare_dual_image(fold, fr_tube).body.is_zero());
  CHECK(thom_top_image(fold, fr_tube).body.is_zero());

  // symplectic model with S = {y = z = 0}
  PoissonBivector model = symplectic_model();
  LeafTubeData tube = make_leaf_tube(dx_form(2), dx_form(3), wedge(dx_form(0), dx_form(1)),
                                     {Rat(0), Rat(0), Rat(0), Rat(0)});
  FormalMultivector image = poincare_dual_image(model, tube);
  CHECK(image.formal_factor == "c_S");
  CHECK(image.body == wedge(partial(2), partial(3)));  // + dy/\dz pushed

  FormalMultivector top = thom_top_image(model, tube);
  Multivector expected_top(kVars, 4);
  expected_top.add_term((Mask(1) << 0) | (Mask(1) << 1) | (Mask(1) << 2) | (Mask(1) << 3),
                        P("1"));
  CHECK(top.body == expected_top);

  // zero structure pushes to zero
  PoissonBivector zero{Multivector::zero(kVars, 2)};
  CHECK(poincare_dual_image(zero, tube).body.is_zero());
  CHECK(thom_top_image(zero, tube).body.is_zero());

  // representative is d_pi-closed for Poisson structures
  CHECK(lichnerowicz_d(model, image.body).is_zero());
}

TEST_CASE("mon_pi on the symplectic model and on Casimir tubes") {
  PoissonBivector model = symplectic_model();
  LeafTubeData tube = make_leaf_tube(dx_form(2), dx_form(3), wedge(dx_form(0), dx_form(1)),
                                     {Rat(0), Rat(0), Rat(0), Rat(0)});
  std::vector<DiffForm> basis_forms{dx_form(0), dx_form(1)};  // a -> dt, b -> dx
  const std::vector<Int> alpha{Int(1), Int(0)};

  SUBCASE("identity matrix gives the plain Thom image of alpha") {
    FormalMultivector result = mon_pi(model, tube, alpha, ZMatrix::identity(2), basis_forms);
    Multivector expected =
        wedge(wedge(anchor_push(model, dx_form(0)), anchor_push(model, dx_form(2))),
              anchor_push(model, dx_form(3)));
    CHECK(result.body == expected);
    // oracle-fixed value: -c_S dx^dy^dz
    Multivector frozen(kVars, 3);
    frozen.add_term((Mask(1) << 1) | (Mask(1) << 2) | (Mask(1) << 3), P("-1"));
    CHECK(result.body == frozen);
  }

  SUBCASE("twist matrix acts through the class vector") {
    ZMatrix twist(2, 2);
    twist.at(0, 0) = 1;
    twist.at(0, 1) = -1;
    twist.at(1, 0) = 0;
    twist.at(1, 1) = 1;
    FormalMultivector on_a = mon_pi(model, tube, alpha, twist, basis_forms);
    Multivector frozen(kVars, 3);
    frozen.add_term((Mask(1) << 1) | (Mask(1) << 2) | (Mask(1) << 3), P("-1"));
    CHECK(on_a.body == frozen);  // twist fixes a

    FormalMultivector on_b = mon_pi(model, tube, {Int(0), Int(1)}, twist, basis_forms);
    // twist: b -> -a + b, realized as -dt + dx
    Multivector expected =
        wedge(wedge(anchor_push(model, dx_form(1) - dx_form(0)), anchor_push(model, dx_form(2))),
              anchor_push(model, dx_form(3)));
    CHECK(on_b.body == expected);
  }

  SUBCASE("FR tubes with Casimir covectors annihilate every class") {
    CasimirPair pair = casimir_pair_from_strings("t", "-x^2+y^2+z^2", "1", kVars);
    PoissonBivector fold = build_fr_bivector(pair);
    LeafTubeData fr_tube = make_leaf_tube(
        derham_d(DiffForm::from_function(pair.F)), derham_d(DiffForm::from_function(pair.G)),
        wedge(dx_form(2), dx_form(3)), {Rat(0), Rat(1), Rat(0), Rat(0)});
    std::mt19937 rng(401);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int i = 0; i < 10; ++i) {
      std::vector<Int> cls{Int(entry(rng)), Int(entry(rng))};
      CHECK(mon_pi(fold, fr_tube, cls, ZMatrix::identity(2), basis_forms).body.is_zero());
    }
  }

  SUBCASE("non-symplectic matrices are rejected") {
    ZMatrix bad(2, 2);
    bad.at(0, 0) = 2;
    bad.at(1, 1) = 1;
    CHECK_THROWS_AS(mon_pi(model, tube, alpha, bad, basis_forms), DomainError);
  }

  SUBCASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(mon_pi(model, tube, {Int(1)}, ZMatrix::identity(2), basis_forms),
                    DomainError);
    CHECK_THROWS_AS(mon_pi(model, tube, alpha, ZMatrix::identity(4), basis_forms), DomainError);
  }
}

TEST_CASE("mayer-vietoris bookkeeping") {
  CohomologyReport a;
  a.cutoff = 2;
  a.blocks.push_back(BlockDims{1, 0, 2, 0, 2});
  CohomologyReport b;
  b.cutoff = 2;
  b.blocks.push_back(BlockDims{1, 0, 3, 0, 3});

  RegionTopology topology;
  topology.empty_pairs.emplace_back("U_C", "U_Gamma");

  SUBCASE("single region is the identity") {
    CohomologyReport merged = mayer_vietoris_assemble({{"U_C", a}}, topology);
    REQUIRE(merged.blocks.size() == 1);
    CHECK(merged.blocks[0].h == 2);
  }

  SUBCASE("two disjoint regions add dimensions") {
    CohomologyReport merged =
        mayer_vietoris_assemble({{"U_C", a}, {"U_Gamma", b}}, topology);
    REQUIRE(merged.blocks.size() == 1);
    CHECK(merged.blocks[0].h == 5);
    CHECK(merged.blocks[0].ker == 5);
  }

  SUBCASE("declared-overlapping regions refuse") {
    RegionTopology overlap;
    overlap.nonempty_pairs.emplace_back("U_C", "U_Gamma");
    CHECK_THROWS_AS(mayer_vietoris_assemble({{"U_C", a}, {"U_Gamma", b}}, overlap),
                    DomainError);
  }

  SUBCASE("undeclared intersections refuse") {
    RegionTopology silent;
    CHECK_THROWS_AS(mayer_vietoris_assemble({{"U_C", a}, {"U_Gamma", b}}, silent), DomainError);
  }
}
