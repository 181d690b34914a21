#include <doctest.h>

#include "repvar/alexander.hpp"
#include "repvar/catalog.hpp"
#include "repvar/cohomology.hpp"

using namespace repvar;

namespace {

std::vector<Matrix> add(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Matrix e12() { return Matrix::from_rows({{Cyc(0), Cyc(1)}, {Cyc(0), Cyc(0)}}); }

}  // namespace

TEST_CASE("D(3,3,3) at rho0") {
  Representation r = dyck333_rho0();
  CocycleSpace z = cocycle_space(r);
  CHECK(z.relator_jacobian.cols() == 6);
  CHECK(rank(z.relator_jacobian) == 2);
  CHECK(z.dim() == 4);
  CohomologyReport c = cohomology_dims(r);
  CHECK(c.h0 == 1);
  CHECK(c.z1 == 4);
  CHECK(c.b1 == 2);
  CHECK(c.h1 == 2);
  CHECK(c.b1 == 3 - c.h0);
  CHECK(c.h1 == c.z1 - c.b1);
  CHECK(z.contains(sl_cochain(dyck333_z1())));
  CHECK(z.contains(sl_cochain(dyck333_z2())));
  // E12 and E21 directions are unconstrained (1 + w + w^2 = 0); the diagonal one is not
  Vector bogus = sl_cochain({Matrix::diag({Cyc(1), Cyc(-1)}), Matrix(2, 2)});
  CHECK(!z.contains(bogus));
}

TEST_CASE("coboundaries") {
  Representation r = dyck333_rho0();
  // (1 - Ad_A) E12 = (1 - w / w^-1) E12 = (1 - w^2) E12
  Cyc w = Cyc::zeta(3);
  Matrix expected = (Cyc(1) - w * w) * e12();
  auto b = coboundary_of(r, e12());
  CHECK(b[0] == expected);
  CHECK(b[1] == expected);
  CHECK(cocycle_space(r).contains(sl_cochain(b)));
  auto centralizer = coboundary_of(r, Matrix::diag({Cyc(1), Cyc(-1)}));
  for (const auto& m : centralizer) CHECK(m.is_zero());

  Representation c = central_rep(trefoil_presentation(), 2, Cyc(-1));
  CHECK(cohomology_dims(c).b1 == 0);
  for (const auto& m : coboundary_of(c, e12())) CHECK(m.is_zero());
}

TEST_CASE("obstruction at order two") {
  Representation r = dyck333_rho0();
  CHECK(obstruction_step({r, {dyck333_z1()}}).extends);
  CHECK(obstruction_step({r, {dyck333_z2()}}).extends);
  ObstructionResult mixed = obstruction_step({r, {add(dyck333_z1(), dyck333_z2())}});
  CHECK(!mixed.extends);
  CHECK(mixed.order == 2);
  bool nonzero = false;
  for (const auto& v : mixed.defect) nonzero = nonzero || !v.is_zero();
  CHECK(nonzero);
  ObstructionResult cob = obstruction_step({r, {coboundary_of(r, e12())}});
  CHECK(cob.extends);
  // exact deformation (I + t z1) rho: keeps extending
  TruncatedDeformation d{r, {dyck333_z1()}};
  for (int k = 0; k < 3; ++k) {
    ObstructionResult s = obstruction_step(d);
    REQUIRE(s.extends);
    d.cochains.push_back(s.extension);
  }
  CHECK(d.order() == 4);
}

TEST_CASE("obstruction input validation") {
  Representation r = dyck333_rho0();
  Matrix h = Matrix::identity(2);
  CHECK_THROWS_AS(obstruction_step({r, {{h, Matrix(2, 2)}}}), InvalidTruncation);
  CHECK_THROWS_AS(obstruction_step({r, {{e12()}}}), InvalidTruncation);
  std::vector<Matrix> not_cocycle{Matrix::diag({Cyc(1), Cyc(-1)}), Matrix(2, 2)};
  CHECK_THROWS_AS(obstruction_step({r, {not_cocycle}}), InvalidTruncation);
}

TEST_CASE("regularity verdicts") {
  Presentation tre = trefoil_presentation();
  Cyc l = Cyc::zeta(24);
  Representation d = diagonal_rep(tre, {l, l.pow(3), l.pow(-4)});  // ratios zeta24^{-2,5,7}
  RegularityVerdict v = check_infinitesimal_regularity(d, 1);
  CHECK(v.infinitesimally_regular);
  CHECK(v.h1 == 2);
  CHECK(v.predicted_component_dim == 8);

  RegularityVerdict dy = check_infinitesimal_regularity(dyck333_rho0(), 1);
  CHECK(!dy.infinitesimally_regular);
  CHECK(!dy.regular);
  CHECK(dy.h1 == 2);

  for (std::size_t n : {2, 3, 4}) {
    RegularityVerdict c = check_infinitesimal_regularity(central_rep(tre, n, Cyc(-1)), 1);
    CHECK(c.z1 == n * n - 1);
    CHECK(c.regular);
    CHECK(c.predicted_component_dim == static_cast<long>(n * n - 1));
  }
}

TEST_CASE("regularity of a metabelian representation") {
  Presentation tre = trefoil_presentation();
  Cyc alpha = Cyc::zeta(6);
  auto basis = solve_metabelian_cocycles(tre, alpha, 2);
  Representation m = build_metabelian(tre, alpha, 2, split_cochain(basis[0], 2, 1));
  Representation s = metabelian_sl(m, alpha, Cyc::zeta(12));
  RegularityVerdict v = check_infinitesimal_regularity(s, 1);
  if (!is_irreducible(s).irreducible) {
    // a coboundary direction gives an abelian point; use the other basis vector
    m = build_metabelian(tre, alpha, 2, split_cochain(basis[1], 2, 1));
    s = metabelian_sl(m, alpha, Cyc::zeta(12));
    v = check_infinitesimal_regularity(s, 1);
  }
  CHECK(v.h1 == 1);
  CHECK(v.infinitesimally_regular);
}

TEST_CASE("knot exteriors have Euler characteristic zero") {
  for (const Representation& r : {trefoil_alpha_s(Cyc(1)), trefoil_rho_st(Cyc(1), Cyc(2)),
                                   dyck334_pullback(dyck334_samples()[0])}) {
    CohomologyReport c = cohomology_dims(r);
    CHECK(c.h2_complex == c.h1 - c.h0);
  }
}

TEST_CASE("other coefficient modules") {
  Presentation tre = trefoil_presentation();
  Representation triv = trivial_rep(tre);
  // one-dimensional twist by lambda: z1 = 1 + [Delta(lambda) = 0]
  CHECK(cohomology_dims(triv, ModuleSpec::one_dim(Cyc(-1))).z1 == 1);
  CHECK(cohomology_dims(triv, ModuleSpec::one_dim(Cyc::zeta(6))).z1 == 2);
  CHECK(cohomology_dims(triv, ModuleSpec::one_dim(Cyc(1))).h0 == 1);

  Representation a = trefoil_alpha_s(Cyc(1));
  ModuleAction hom = module_action(a, ModuleSpec::hom(a, a));
  ModuleAction ten = rep_action(tensor(a, dual(a)));
  CHECK(hom.act == ten.act);
  CHECK(cohomology_dims(a, ModuleSpec::hom(a, a)).h0 == 1);  // Schur
  CHECK(cohomology_dims(a, ModuleSpec::ad_gl()).z1 == cohomology_dims(a).z1 + 1);

  Presentation bare = dyck333_presentation();
  CHECK_THROWS_AS(module_action(dyck333_rho0(), ModuleSpec::one_dim(Cyc(2))), ModuleActionUndefined);
  CHECK_THROWS_AS(module_action(dyck333_rho0(), ModuleSpec::hom(a, a)), ModuleActionUndefined);
  CHECK(ModuleSpec::metabelian(Cyc::zeta(6), 3).str().rfind("metabelian", 0) == 0);
}

TEST_CASE("tangent gap") {
  TangentGapReport lm = tangent_gap_report(lubotzky_magid_rho(), 3);
  CHECK(lm.z1 == 4);
  CHECK(lm.gap == 1);
  CHECK(lm.strict);
  TangentGapReport c = tangent_gap_report(central_rep(trefoil_presentation(), 3, Cyc(1)), 8);
  CHECK(c.gap == 0);
  CHECK(!c.strict);
  TangentGapReport info = tangent_gap_report(dyck333_rho0(), std::nullopt);
  CHECK(info.z1 == 4);
  CHECK(!info.local_dim);
  CHECK(!info.strict);
}

TEST_CASE("Lubotzky-Magid") {
  CohomologyReport c = cohomology_dims(lubotzky_magid_rho());
  CHECK(c.h0 == 0);
  CHECK(c.b1 == 3);
  CHECK(c.h1 == 1);
  CHECK(cocycle_space(lubotzky_magid_rho()).contains(sl_cochain(lubotzky_magid_z())));
  CHECK(cohomology_dims(lubotzky_magid_rho_prime()).h1 == 0);
}
