#include "repvar/catalog.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace repvar {

namespace {

constexpr long kTrefoilOrder = 12;

Cyc zeta(long order, long k = 1) { return Cyc::zeta(order, k); }

Matrix mat(std::size_t n, std::vector<Cyc> e) { return Matrix(n, n, std::move(e)); }

Matrix rational_mat(std::size_t n, const std::vector<long>& e) {
  std::vector<Cyc> c;
  for (long v : e) c.emplace_back(v);
  return Matrix(n, n, c);
}

}  // namespace

Presentation trefoil_presentation() { return parse_presentation("gens x, y; rel x^2 = y^3; ab x=3, y=2;"); }

Presentation figure8_presentation() {
  return parse_presentation("gens t, a, b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;");
}

Presentation dyck333_presentation() { return parse_presentation("gens a, b; rel a^3, b^3, (ab)^3;"); }

Presentation dyck334_presentation() { return parse_presentation("gens k, l; rel l^3, k^3, (kl)^4;"); }

Presentation lubotzky_magid_presentation() {
  return parse_presentation(
      "gens a, s, t1, t2;"
      "rel a^6, s^2 = a^3, s a s^-1 = a^-1, [t1, t2], s t1 s^-1 = t2, s t2 s^-1 = t1,"
      "    a t1 a^-1 = t2^-1, a t2 a^-1 = t1 t2^-1;");
}

Presentation torus_knot_presentation(long p) {
  if (p < 3 || p % 2 == 0) throw DimensionMismatch("torus knot T(p,2) needs odd p >= 3");
  std::string ps = std::to_string(p);
  return parse_presentation("gens x, y; rel x^2 = y^" + ps + "; ab x=" + ps + ", y=2;");
}

// ---------------------------------------------------------------------------
// Trefoil

Representation trefoil_alpha_s(const Cyc& s) {
  Cyc i = zeta(4).embed(kTrefoilOrder), eta = zeta(6).embed(kTrefoilOrder);
  Matrix x = mat(2, {i, 0, s, -i});
  Matrix y = mat(2, {eta, eta.conj() - eta, 0, eta.conj()});
  return make_rep(trefoil_presentation(), {x, y});
}

Representation trefoil_rho_st(const Cyc& s, const Cyc& t) {
  Cyc w = zeta(3);
  Matrix x = mat(3, {1, 0, 0, s, -1, 0, t, 0, -1});
  Matrix y = mat(3, {1, w - Cyc(1), w * w - Cyc(1), 0, w, 0, 0, 0, w * w});
  return make_rep(trefoil_presentation(), {x, y});
}

Representation diagonal_rep_n2(const Presentation& p, const Cyc& lambda) {
  return direct_sum(one_dim(p, lambda), one_dim(p, lambda.inverse()));
}

Representation trefoil_alpha0_limit() {
  Representation a0 = trefoil_alpha_s(Cyc(0));
  LaurentMatrix pt(2, 2), pinv(2, 2);
  pt(0, 0) = LaurentPoly::monomial(1);
  pt(1, 1) = LaurentPoly::monomial(-1);
  pinv(0, 0) = LaurentPoly::monomial(-1);
  pinv(1, 1) = LaurentPoly::monomial(1);
  std::vector<Matrix> limit;
  for (const auto& m : a0.images()) {
    LaurentMatrix c = pt * LaurentMatrix(m) * pinv;
    Matrix lim(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const LaurentPoly& e = c(i, j);
        if (!e.is_zero() && e.low() < 0) throw UnrepresentableInput("limit t -> 0 does not exist");
        lim(i, j) = e.coeff(0);
      }
    limit.push_back(lim);
  }
  return make_rep(a0.presentation(), limit);
}

Representation central_rep(const Presentation& p, std::size_t n, const Cyc& z) {
  return twist_by_character(trivial_rep(p, n), z, 1);
}

Representation diagonal_rep(const Presentation& p, const std::vector<Cyc>& lambdas) {
  Representation r = one_dim(p, lambdas.at(0));
  for (std::size_t i = 1; i < lambdas.size(); ++i) r = direct_sum(r, one_dim(p, lambdas[i]));
  return r;
}

// ---------------------------------------------------------------------------
// D(3,3,3)

Representation dyck333_rho0() {
  Cyc w = zeta(3);
  Matrix a = Matrix::diag({w, w.conj()});
  return make_rep(dyck333_presentation(), {a, a});
}

std::vector<Matrix> dyck333_z1() { return {Matrix(2, 2), rational_mat(2, {0, 1, 0, 0})}; }
std::vector<Matrix> dyck333_z2() { return {Matrix(2, 2), rational_mat(2, {0, 0, 1, 0})}; }

// ---------------------------------------------------------------------------
// Lubotzky-Magid

Representation lubotzky_magid_rho() {
  Cyc eta = zeta(6).embed(kTrefoilOrder);
  Matrix a = Matrix::diag({eta, eta.conj()});
  Matrix s = rational_mat(2, {0, 1, -1, 0});
  return make_rep(lubotzky_magid_presentation(), {a, s, Matrix::identity(2), Matrix::identity(2)});
}

Representation lubotzky_magid_rho_prime() {
  Cyc eta = zeta(6).embed(kTrefoilOrder), w = zeta(3).embed(kTrefoilOrder);
  Matrix a = Matrix::diag({eta, eta.conj()});
  Matrix s = rational_mat(2, {0, 1, -1, 0});
  return make_rep(lubotzky_magid_presentation(),
                  {a, s, Matrix::diag({w, w.conj()}), Matrix::diag({w.conj(), w})});
}

std::vector<Matrix> lubotzky_magid_z() {
  Cyc eta = zeta(6).embed(kTrefoilOrder);
  Cyc p = Cyc(1) + eta, q = Cyc(1) + eta.conj();
  return {Matrix(2, 2), Matrix(2, 2), mat(2, {0, p, -q, 0}), mat(2, {0, q, -p, 0})};
}

// ---------------------------------------------------------------------------
// Figure-eight and D(3,3,4)

Cyc figure8_hypersurface(const Cyc& nu, const Cyc& nb, const Cyc& z) {
  return z * z - (nu * nb - Cyc(2)) * z + nu.pow(3) + nb.pow(3) - Cyc(5) * nu * nb + Cyc(5);
}

std::vector<Word> figure8_automorphism() {
  Presentation p = figure8_presentation();
  return {parse_word(p, "t a^-1 t^-1 a t^-1"), parse_word(p, "a^-1 t a b^-1 a^-1 t^-1 a"),
          parse_word(p, "a^-1 t a t^-1 a")};
}

std::vector<Word> figure8_to_dyck334() {
  Presentation d = dyck334_presentation();
  return {parse_word(d, "k l k"), parse_word(d, "k^-1 l^-1 k l"), parse_word(d, "k l")};
}

AutomorphismReport figure8_automorphism_check(const Representation& r) {
  AutomorphismReport rep;
  const Presentation& p = r.presentation();
  auto h = figure8_automorphism();
  rep.relators_preserved = true;
  for (const auto& rel : p.relators)
    rep.relators_preserved = rep.relators_preserved && evaluate(r, substitute(rel, h)).is_identity();
  Word t = Word::gen(0), l = commutator(Word::gen(1), Word::gen(2));
  rep.meridian_inverted = evaluate(r, h[0]).trace() == evaluate(r, t.inverse()).trace();
  rep.longitude_preserved = evaluate(r, substitute(l, h)).trace() == evaluate(r, l).trace();
  return rep;
}

Representation dyck334_rep(const Matrix& l) {
  Matrix k = rational_mat(3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  return make_rep(dyck334_presentation(), {k, l});
}

std::vector<Representation> dyck334_samples() {
  std::vector<Representation> out;
  out.push_back(dyck334_rep(rational_mat(3, {-3, -1, -4, -1, 2, 0, 2, -2, 1})));
  out.push_back(dyck334_rep(rational_mat(3, {1, 0, 0, -6, -2, -1, 2, 3, 1})));
  for (long x : {2L, 5L}) out.push_back(dyck334_rep(rational_mat(3, {-1, 0, -1, x, 1, 0, 1, 0, 0})));
  return out;
}

Representation dyck334_pullback(const Representation& d, bool precompose_h) {
  auto phi = figure8_to_dyck334();
  std::vector<Word> words = phi;
  if (precompose_h) {
    words.clear();
    for (const auto& w : figure8_automorphism()) words.push_back(substitute(w, phi));
  }
  std::vector<Matrix> images;
  for (const auto& w : words) images.push_back(evaluate(d, w));
  return make_rep(figure8_presentation(), images);
}

std::vector<Cyc> figure8_coordinates(const Representation& r, Figure8Table table) {
  Word t = Word::gen(0), a = Word::gen(1), b = Word::gen(2);
  Cyc chi_t = evaluate(r, t).trace(), chi_ti = evaluate(r, t.inverse()).trace();
  if (table == Figure8Table::ChiT) return {chi_t, chi_ti, evaluate(r, a).trace()};
  return {chi_ti, chi_t, evaluate(r, b.inverse()).trace()};
}

std::vector<Cyc> dyck334_coordinates(const Representation& r) {
  Word k = Word::gen(0), l = Word::gen(1);
  return {evaluate(r, k.inverse() * l).trace(), evaluate(r, k * l.inverse()).trace(),
          evaluate(r, commutator(k, l)).trace()};
}

// ---------------------------------------------------------------------------
// Torus knots

std::vector<Representation> torus_knot_patterns(long p) {
  Presentation pres = torus_knot_presentation(p);
  long order = 3 * p;
  std::vector<Representation> out;
  for (long j = 0; j < 3; ++j) {
    Cyc eps = zeta(3, j).embed(order), mu = eps * eps;
    // p-th roots of eps = zeta_3^j are zeta_(3p)^e with e = j mod 3
    std::vector<long> exps;
    for (long e = 0; e < order; ++e)
      if (e % 3 == j) exps.push_back(e);
    for (std::size_t i1 = 0; i1 < exps.size(); ++i1)
      for (std::size_t i2 = i1 + 1; i2 < exps.size(); ++i2)
        for (std::size_t i3 = i2 + 1; i3 < exps.size(); ++i3) {
          if ((exps[i1] + exps[i2] + exps[i3]) % order != 0) continue;
          Cyc b1 = zeta(order, exps[i1]), b2 = zeta(order, exps[i2]), b3 = zeta(order, exps[i3]);
          Matrix x = mu * mat(3, {1, 0, 0, 1, -1, 0, 2, 0, -1});  // s = 1, t = 2, off the lines s t (s + t - 2) = 0
          Matrix y = mat(3, {b1, b2 - b1, b3 - b1, 0, b2, 0, 0, 0, b3});
          out.push_back(make_rep(pres, {x, y}));
        }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Figure-eight SL(2) representation with traces (-2, 2/3) on (a, b).

namespace {

Representation figure8_sl2() {
  Cyc s = Cyc(2) * zeta(3) + Cyc(1);  // sqrt(-3)
  Matrix a = mat(2, {-2, 1, -1, 0});
  Matrix b = mat(2, {Rational(-4, 3), 1, Rational(-11, 3), 2});
  Matrix t0 = mat(2, {Rational(-3, 5), Rational(3, 5), Rational(-1, 5), 1});
  Matrix t = (Cyc(5) / (Cyc(2) * s)) * t0;
  return make_rep(figure8_presentation(), {t, a, b});
}

struct Suite {
  std::vector<Assertion> out;
  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    out.push_back({name, expected, actual, expected == actual});
  }
  void check(const std::string& name, bool ok) { check(name, "true", ok ? "true" : "false"); }
  void check(const std::string& name, std::size_t expected, std::size_t actual) {
    check(name, std::to_string(expected), std::to_string(actual));
  }
};

std::string torus_id(long p) { return "torus_knot(" + std::to_string(p) + ",2)"; }

long parse_torus_id(const std::string& id) {
  static const std::regex re(R"(torus_knot\((\d+),\s*2\))");
  std::smatch m;
  if (!std::regex_match(id, m, re)) return -1;
  return std::stol(m[1]);
}

}  // namespace

std::vector<std::string> catalog_ids() {
  return {"trefoil", "figure8", "dyck333", "dyck334", "lubotzky_magid", torus_id(3), torus_id(5)};
}

CatalogEntry entry(const std::string& id) {
  CatalogEntry e;
  e.id = id;
  if (id == "trefoil") {
    e.presentation = trefoil_presentation();
    e.field_order = kTrefoilOrder;
    e.representations = {{"alpha_1", trefoil_alpha_s(Cyc(1))},
                         {"alpha_0", trefoil_alpha_s(Cyc(0))},
                         {"rho_1_2", trefoil_rho_st(Cyc(1), Cyc(2))}};
  } else if (id == "figure8") {
    e.presentation = figure8_presentation();
    e.field_order = 3;
    e.representations = {{"sl2", figure8_sl2()}, {"pullback", dyck334_pullback(dyck334_samples()[0])}};
  } else if (id == "dyck333") {
    e.presentation = dyck333_presentation();
    e.field_order = kTrefoilOrder;
    e.representations = {{"rho0", dyck333_rho0()}};
  } else if (id == "dyck334") {
    e.presentation = dyck334_presentation();
    e.field_order = 1;
    auto samples = dyck334_samples();
    for (std::size_t i = 0; i < samples.size(); ++i)
      e.representations.emplace_back("sample_" + std::to_string(i + 1), samples[i]);
  } else if (id == "lubotzky_magid") {
    e.presentation = lubotzky_magid_presentation();
    e.field_order = kTrefoilOrder;
    e.representations = {{"rho", lubotzky_magid_rho()}, {"rho_prime", lubotzky_magid_rho_prime()}};
  } else if (long p = parse_torus_id(id); p > 0) {
    e.presentation = torus_knot_presentation(p);
    e.field_order = 3 * p;
    auto reps = torus_knot_patterns(p);
    for (std::size_t i = 0; i < reps.size(); ++i)
      e.representations.emplace_back("pattern_" + std::to_string(i + 1), reps[i]);
  } else {
    throw UnknownEntry("no catalog entry '" + id + "'");
  }
  return e;
}

std::vector<Assertion> run_entry(const std::string& id) {
  CatalogEntry e = entry(id);
  Suite s;
  const Presentation& p = e.presentation;
  if (id == "trefoil") {
    LaurentPoly delta = alexander_polynomial(p);
    s.check("delta1", "t^2 - t + 1", delta.str());
    s.check("delta_at_zeta6_is_zero", laurent_eval(delta, zeta(6)).is_zero());
    RootVerdict v = deformation_condition_n2(p, zeta(12));
    s.check("zeta12_squared_simple_root", v.is_simple_root);
    s.check("lambda_1_not_root", !deformation_condition_n2(p, Cyc(1)).is_root);
    s.check("alpha_1_irreducible", is_irreducible(trefoil_alpha_s(Cyc(1))).irreducible);
    IrreducibilityResult r0 = is_irreducible(trefoil_alpha_s(Cyc(0)));
    s.check("alpha_0_reducible_with_line", !r0.irreducible && r0.invariant_subspace.has_value());
    Cyc two_i = Cyc(2) * zeta(4).embed(kTrefoilOrder);
    s.check("alpha_2i_reducible", !is_irreducible(trefoil_alpha_s(two_i)).irreducible);
    Cyc lim_zeta = zeta(4).embed(kTrefoilOrder) * zeta(6).conj();
    s.check("alpha_0_limit_is_diagonal", trefoil_alpha0_limit().images() == diagonal_rep_n2(p, lim_zeta).images());
    s.check("rho_st_1_2_irreducible", is_irreducible(trefoil_rho_st(Cyc(1), Cyc(2))).irreducible);
    s.check("rho_st_1_1_reducible", !is_irreducible(trefoil_rho_st(Cyc(1), Cyc(1))).irreducible);
    s.check("rho_st_0_0_reducible", !is_irreducible(trefoil_rho_st(Cyc(0), Cyc(0))).irreducible);
    for (std::size_t n : {2, 3}) {
      RegularityVerdict c = check_infinitesimal_regularity(central_rep(p, n, Cyc(1)), 1);
      s.check("central_n" + std::to_string(n) + "_z1", n * n - 1, c.z1);
      s.check("central_n" + std::to_string(n) + "_regular", c.regular);
    }
    CohomologyReport c = cohomology_dims(trefoil_alpha_s(Cyc(1)));
    s.check("alpha_1_euler_identity", c.h1 - c.h0, c.h2_complex);
  } else if (id == "figure8") {
    LaurentPoly delta = alexander_polynomial(p);
    s.check("delta1", "t^2 - 3*t + 1", delta.str());
    s.check("delta1_symmetric", associated(delta, delta.invert_variable()));
    Cyc w = zeta(3);
    s.check("F(2,2,1)", figure8_hypersurface(2, 2, 1).is_zero());
    s.check("F(2w,2w^2,1)", figure8_hypersurface(Cyc(2) * w, Cyc(2) * w * w, 1).is_zero());
    s.check("F(2w^2,2w,1)", figure8_hypersurface(Cyc(2) * w * w, Cyc(2) * w, 1).is_zero());
    s.check("F(0,0,0)", "5", figure8_hypersurface(0, 0, 0).str());
    bool on_surface = true, aut = true;
    for (const auto& d : dyck334_samples()) {
      auto c1 = figure8_coordinates(dyck334_pullback(d), Figure8Table::ChiT);
      auto c2 = figure8_coordinates(dyck334_pullback(d, true), Figure8Table::ChiTInv);
      on_surface = on_surface && figure8_hypersurface(c1[0], c1[1], c1[2]).is_zero() &&
                   figure8_hypersurface(c2[0], c2[1], c2[2]).is_zero();
      AutomorphismReport a = figure8_automorphism_check(dyck334_pullback(d));
      aut = aut && a.relators_preserved && a.meridian_inverted && a.longitude_preserved;
    }
    s.check("pullbacks_on_hypersurface", on_surface);
    s.check("automorphism_checks", aut);
    Representation sl2 = figure8_sl2();
    s.check("sl2_irreducible", is_irreducible(sl2).irreducible);
    AlexanderData a = alexander_polynomials(sl2), ad = alexander_polynomials(dual(sl2));
    s.check("sl2_duality", associated(ad.delta1, a.delta1.invert_variable()));
  } else if (id == "dyck333") {
    Representation r = dyck333_rho0();
    CohomologyReport c = cohomology_dims(r);
    s.check("z1", 4, c.z1);
    s.check("b1", 2, c.b1);
    s.check("h1", 2, c.h1);
    CocycleSpace z = cocycle_space(r);
    s.check("z1_in_space", z.contains(sl_cochain(dyck333_z1())));
    s.check("z2_in_space", z.contains(sl_cochain(dyck333_z2())));
    s.check("b_E12_in_space", z.contains(sl_cochain(coboundary_of(r, rational_mat(2, {0, 1, 0, 0})))));
    s.check("z1_extends", obstruction_step({r, {dyck333_z1()}}).extends);
    s.check("z2_extends", obstruction_step({r, {dyck333_z2()}}).extends);
    std::vector<Matrix> mixed{dyck333_z1()[0] + dyck333_z2()[0], dyck333_z1()[1] + dyck333_z2()[1]};
    s.check("z1_plus_z2_obstructed", !obstruction_step({r, {mixed}}).extends);
    // rho_1(1): traces (-1, -1, -1) on (a, b, ab), triangular
    Matrix b = (Matrix::identity(2) + rational_mat(2, {0, 1, 0, 0})) * r.image(1);
    Representation r1 = make_rep(p, {r.image(0), b});
    IrreducibilityResult ir = is_irreducible(r1);
    s.check("triangular_rep_has_invariant_line",
            !ir.irreducible && ir.invariant_subspace && ir.invariant_subspace->cols() == 1);
  } else if (id == "dyck334") {
    bool traces = true, surface = true;
    Word k = Word::gen(0), l = Word::gen(1);
    for (const auto& [name, r] : e.representations) {
      for (const Word& w : {k, k.inverse(), l, l.inverse()}) traces = traces && evaluate(r, w).trace().is_zero();
      traces = traces && evaluate(r, k * l).trace().is_one() && evaluate(r, (k * l).inverse()).trace().is_one();
      auto c = dyck334_coordinates(r);
      surface = surface && figure8_hypersurface(c[0], c[1], c[2]).is_zero();
    }
    s.check("component_traces", traces);
    s.check("kl_coordinates_on_hypersurface", surface);
  } else if (id == "lubotzky_magid") {
    Representation r = lubotzky_magid_rho(), rp = lubotzky_magid_rho_prime();
    CohomologyReport c = cohomology_dims(r);
    s.check("h1_rho", 1, c.h1);
    s.check("z_in_space", cocycle_space(r).contains(sl_cochain(lubotzky_magid_z())));
    s.check("h1_rho_prime", 0, cohomology_dims(rp).h1);
    TangentGapReport g = tangent_gap_report(r, 3);
    s.check("tangent_gap", "1", std::to_string(g.gap));
    s.check("non_reduced_evidence", g.strict);
  } else {
    long pp = parse_torus_id(id);
    std::size_t expected = static_cast<std::size_t>((pp - 1) * (pp - 2) / 2);
    s.check("irreducible_components", expected, e.representations.size());
    bool irr = true;
    for (const auto& [name, r] : e.representations) irr = irr && is_irreducible(r).irreducible;
    s.check("patterns_irreducible", irr);
  }
  return s.out;
}

}  // namespace repvar
