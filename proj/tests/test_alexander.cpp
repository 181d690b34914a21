#include <doctest.h>

#include "oracle.hpp"
#include "repvar/alexander.hpp"
#include "repvar/catalog.hpp"
#include "repvar/cohomology.hpp"

using namespace repvar;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s, 1); }

}  // namespace

TEST_CASE("twisted Fox matrix of the trefoil") {
  TwistedFoxMatrix f = twisted_fox_matrix(trivial_rep(trefoil_presentation()));
  REQUIRE(f.matrix.rows() == 1);
  REQUIRE(f.matrix.cols() == 2);
  // d(x^2 y^-3)/dx = 1 + x, d/dy = -x^2 (y^-1 + y^-2 + y^-3), with x = t^3, y = t^2
  CHECK(f.matrix(0, 0) == L("1 + t^3"));
  CHECK(f.matrix(0, 1) == L("-1 - t^2 - t^4"));
}

TEST_CASE("twisted Fox matrix of the figure-eight") {
  TwistedFoxMatrix f = twisted_fox_matrix(trivial_rep(figure8_presentation()));
  REQUIRE(f.matrix.rows() == 2);
  REQUIRE(f.matrix.cols() == 3);
  // relators t a t^-1 b^-1 a^-1 and t b t^-1 b^-1 a^-1 b^-1, with t -> t, a, b -> 1
  const char* expected[6] = {"0", "t - 1", "-1", "0", "-1", "t - 2"};
  for (int i = 0; i < 6; ++i) CHECK(f.matrix(i / 3, i % 3) == L(expected[i]));
}

TEST_CASE("classical Alexander polynomials") {
  AlexanderData t = alexander_polynomials(trivial_rep(trefoil_presentation()));
  CHECK(t.delta0 == L("t - 1"));
  CHECK(t.delta1 == L("t^2 - t + 1"));
  CHECK(alexander_polynomials(trivial_rep(trefoil_presentation()), 1).delta1 == L("t^2 - t + 1"));
  LaurentPoly f8 = alexander_polynomial(figure8_presentation());
  CHECK(f8 == L("t^2 - 3*t + 1"));
  CHECK(associated(f8, f8.invert_variable()));
  CHECK(alexander_polynomial(parse_presentation("gens x; rel ; ab x=1;")) == LaurentPoly(1));
  CHECK(alexander_polynomial(torus_knot_presentation(5)) == L("t^4 - t^3 + t^2 - t + 1"));
}

TEST_CASE("deletable columns") {
  Representation triv = trivial_rep(figure8_presentation());
  CHECK(alexander_polynomials(triv).column_deleted == 0);
  CHECK_THROWS_AS(alexander_polynomials(triv, 1), NoDeletableColumn);
  CHECK_THROWS_AS(alexander_polynomials(triv, 7), NoDeletableColumn);
  Presentation none = make_presentation({}, {}, std::vector<long>{});
  CHECK_THROWS_AS(alexander_polynomial(none), NoDeletableColumn);
}

TEST_CASE("twisted polynomials and duality") {
  Representation a = trefoil_alpha_s(Cyc(1));
  AlexanderData d = alexander_polynomials(a), dd = alexander_polynomials(dual(a));
  CHECK(associated(dd.delta1, d.delta1.invert_variable()));
  CHECK(associated(dd.delta0, d.delta0.invert_variable()));
  // Delta of a direct sum is the product
  Representation s = direct_sum(a, trivial_rep(trefoil_presentation()));
  CHECK(associated(alexander_polynomials(s).delta1, d.delta1 * L("t^2 - t + 1")));
}

TEST_CASE("specialization matches the cocycle Jacobian") {
  Representation a = trefoil_alpha_s(Cyc(1));
  TwistedFoxMatrix f = twisted_fox_matrix(a);
  for (long k : {1, 3, 5}) {
    Cyc t0 = Cyc::zeta(12, k);
    Representation tw = twist_by_character(a, t0, 1);
    Matrix jac = fox_jacobian(tw.presentation(), rep_action(tw));
    CHECK(rank(f.matrix.eval(t0)) == rank(jac));
  }
}

TEST_CASE("root verdicts") {
  RootVerdict v = deformation_condition_n2(trefoil_presentation(), Cyc::zeta(12));
  CHECK(v.is_root);
  CHECK(v.is_simple_root);
  CHECK(oracle::close(oracle::value(laurent_eval(L("2*t - 1"), Cyc::zeta(6))), 2.0 * oracle::root(6, 1) - 1.0));
  RootVerdict one = deformation_condition_n2(trefoil_presentation(), Cyc(1));
  CHECK(!one.is_root);
  CHECK(one.value == Cyc(1));
  CHECK(!root_verdict(L("t^2 - 2*t + 1"), Cyc(1)).is_simple_root);
  CHECK(root_verdict(L("t^2 - 2*t + 1"), Cyc(1)).is_root);
  CHECK_THROWS_AS(deformation_condition_n2(trefoil_presentation(), Cyc(0)), EvalAtZero);
  CHECK_THROWS_AS(deformation_condition_n2(figure8_presentation(), parse_cyc("sqrt((3 + sqrt(5)) / 2)", 24)),
                  UnrepresentableInput);
}

TEST_CASE("general deformation condition") {
  Presentation tre = trefoil_presentation();
  Representation a = trefoil_alpha_s(Cyc(1)), b = trivial_rep(tre);
  GeneralVerdict v = deformation_condition_general(a, b, Cyc::zeta(24, 5));
  CHECK(v.duality_holds);
  CHECK(associated(v.delta_ab, alexander_polynomials(a).delta1));
  CHECK(v.at_ab.point == Cyc::zeta(24, 15));
  CHECK(v.at_ba.point == Cyc::zeta(24, -15));
  CHECK_THROWS_AS(deformation_condition_general(trefoil_alpha_s(Cyc(0)), b, Cyc(2)), NotIrreducible);
  CHECK_THROWS_AS(deformation_condition_general(a, trivial_rep(figure8_presentation()), Cyc(2)),
                  PresentationMismatch);
}
