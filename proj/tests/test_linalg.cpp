#include <doctest.h>

#include "oracle.hpp"
#include "repvar/linalg.hpp"

using namespace repvar;

namespace {

Matrix ints(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Cyc> e(v.begin(), v.end());
  return Matrix(r, c, e);
}

LaurentPoly L(const char* s) { return parse_laurent(s, 1); }

}  // namespace

TEST_CASE("rank and kernels") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 3)) == 0);
  Matrix m = ints(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0});
  CHECK(rank(m) == 2);
  auto k = kernel_basis(m);
  CHECK(k.size() == 2);
  for (const auto& v : k) {
    Vector z = m * v;
    for (const auto& c : z) CHECK(c.is_zero());
  }
}

TEST_CASE("solve") {
  CHECK(!solve(Matrix(2, 2), Vector{Cyc(1), Cyc(0)}).has_value());
  Matrix m = ints(2, 2, {2, 1, 1, 1});
  auto x = solve(m, Vector{Cyc(3), Cyc(2)});
  REQUIRE(x);
  CHECK((*x)[0] == Cyc(1));
  CHECK((*x)[1] == Cyc(1));
}

TEST_CASE("determinant, inverse, powers") {
  Cyc w = Cyc::zeta(3);
  Matrix a = Matrix::from_rows({{w, Cyc(1)}, {Cyc(0), w.conj()}});
  CHECK(a.det().is_one());
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(3).is_identity());  // diagonalizable with cube-root eigenvalues
  CHECK(a.pow(-2) == a.inverse().pow(2));
  CHECK_THROWS_AS(ints(2, 2, {1, 2, 2, 4}).inverse(), DivisionByZero);
  Matrix b = ints(3, 3, {2, -1, 0, 1, 3, 5, -4, 0, 1});
  // Rule of Sarrus
  long sarrus = 2 * 3 * 1 + (-1) * 5 * (-4) + 0 - 0 - 2 * 5 * 0 - (-1) * 1 * 1;
  CHECK(b.det() == Cyc(sarrus));
}

TEST_CASE("kronecker products") {
  CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  Cyc l = Cyc::zeta(12), m = Cyc::zeta(12, 5);
  Matrix k = kronecker(Matrix::diag({l, l.inverse()}), Matrix::diag({m, m.inverse()}));
  CHECK(k == Matrix::diag({l * m, l * m.inverse(), l.inverse() * m, l.inverse() * m.inverse()}));
  Matrix a = ints(2, 2, {1, 2, 3, 4}), b = ints(2, 2, {0, 1, 1, 0});
  CHECK(kronecker(a, b)(1, 2) == Cyc(2));  // a(0,1) * b(1,0)
  CHECK_THROWS_AS(a * Matrix(3, 3), DimensionMismatch);
}

TEST_CASE("laurent matrices and minors") {
  LaurentMatrix d(2, 2);
  d(0, 0) = L("t - 1");
  d(1, 1) = L("t - 1");
  CHECK(minors_gcd(d, 1) == L("t - 1"));
  CHECK(minors_gcd(d, 2) == L("t^2 - 2*t + 1"));
  CHECK(minors_gcd(d, 0) == LaurentPoly(1));
  CHECK(maximal_minors_gcd(d) == L("t^2 - 2*t + 1"));

  // Trefoil Fox row [1 + t^3, -(1 + t^2 + t^4)]; deleting either column leaves a
  // single entry, and dividing by the matching t^phi - 1 gives t^2 - t + 1.
  LaurentMatrix fox(1, 2);
  fox(0, 0) = L("1 + t^3");
  fox(0, 1) = L("-1 - t^2 - t^4");
  CHECK(associated(fox(0, 0) * L("t - 1") / L("t^2 - 1"), L("t^2 - t + 1")));
  CHECK(associated(fox(0, 1) * L("t - 1") / L("t^3 - 1"), L("t^2 - t + 1")));
  // (1 + t)(1 - t + t^2) and (1 + t + t^2)(1 - t + t^2)
  CHECK(maximal_minors_gcd(fox) == L("t^2 - t + 1"));
}

TEST_CASE("maximal minors by reduction match enumeration") {
  LaurentMatrix m(2, 3);
  m(0, 0) = L("t - 1");
  m(0, 1) = L("t^2 - 1");
  m(0, 2) = L("t");
  m(1, 0) = L("2");
  m(1, 1) = L("t + 1");
  m(1, 2) = L("t^3 - t");
  CHECK(maximal_minors_gcd(m) == minors_gcd(m, 2));
  Matrix at2 = m.eval(Cyc(2));
  CHECK(at2(1, 2) == Cyc(6));
}

TEST_CASE("laurent determinant agrees with pointwise determinants") {
  LaurentMatrix m(3, 3);
  const char* e[9] = {"t", "1", "0", "t^-1 - 2", "3", "t^2", "1", "t - 1", "5"};
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = L(e[i]);
  LaurentPoly d = m.det();
  for (long x : {2, 3, -5}) CHECK(laurent_eval(d, Cyc(x)) == m.eval(Cyc(x)).det());
}
