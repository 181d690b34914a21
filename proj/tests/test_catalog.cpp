#include <doctest.h>

#include <algorithm>

#include "repvar/catalog.hpp"

using namespace repvar;

TEST_CASE("every catalog entry passes its assertions") {
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    auto results = run_entry(id);
    CHECK(!results.empty());
    for (const auto& a : results) {
      CAPTURE(a.name);
      CHECK(a.passed);
    }
  }
  CHECK_THROWS_AS(entry("unknown"), UnknownEntry);
  CHECK_THROWS_AS(run_entry("torus_knot(4,2)"), Error);
}

TEST_CASE("catalog presentations") {
  CatalogEntry d = entry("dyck333");
  CHECK(d.presentation == parse_presentation("gens a, b; rel a^3, b^3, (ab)^3;"));
  CatalogEntry lm = entry("lubotzky_magid");
  CHECK(lm.presentation.generator_count() == 4);
  CHECK(lm.presentation.relators.size() == 8);
  CHECK(word_str(lm.presentation, lm.presentation.relators[7]) == "a t2 a^-1 t2 t1^-1");
  CHECK(!lm.presentation.abelianization);
}

TEST_CASE("trefoil SL(3) families") {
  // Reducible exactly on s = 0, t = 0 and s + t = 2.
  CHECK(is_irreducible(trefoil_rho_st(Cyc(1), Cyc(3))).irreducible);
  CHECK(!is_irreducible(trefoil_rho_st(Cyc(1), Cyc(1))).irreducible);
  for (auto [s, t] : {std::pair{0, 0}, std::pair{0, 2}, std::pair{2, 0}}) {
    Representation r = trefoil_rho_st(Cyc(s), Cyc(t));
    CHECK(!is_irreducible(r).irreducible);
    // complete flag: character of a diagonal representation
    // ... for some pairing of the eigenvalues of x and y
    Cyc w = Cyc::zeta(3);
    std::vector<Word> words{Word::gen(0) * Word::gen(1), Word::gen(0) * Word::gen(1, 2),
                            commutator(Word::gen(0), Word::gen(1))};
    std::vector<Cyc> ys{Cyc(1), w, w * w};
    auto by_text = [](const Cyc& a, const Cyc& b) { return a.str() < b.str(); };
    std::sort(ys.begin(), ys.end(), by_text);
    bool matched = false;
    do {
      Representation diag =
          make_rep(trefoil_presentation(), {Matrix::diag({Cyc(1), Cyc(-1), Cyc(-1)}), Matrix::diag(ys)});
      matched = matched || character_of(r, words).values == character_of(diag, words).values;
    } while (std::next_permutation(ys.begin(), ys.end(), by_text));
    CHECK(matched);
  }
}

TEST_CASE("trefoil SL(2) limit") {
  Representation lim = trefoil_alpha0_limit();
  Cyc i = Cyc::zeta(4).embed(12), eta = Cyc::zeta(6).embed(12);
  CHECK(lim.image(0) == Matrix::diag({i, -i}));
  CHECK(lim.image(1) == Matrix::diag({eta, eta.conj()}));
  CHECK(lim.images() == diagonal_rep_n2(trefoil_presentation(), i * eta.conj()).images());
  // conjugate to the diagonal representation at -i eta by swapping the basis
  Matrix swap = Matrix::from_rows({{Cyc(0), Cyc(1)}, {Cyc(1), Cyc(0)}});
  CHECK(conjugate(lim, swap).images() == diagonal_rep_n2(trefoil_presentation(), -i * eta).images());
}

TEST_CASE("figure-eight hypersurface") {
  Cyc w = Cyc::zeta(3);
  CHECK(figure8_hypersurface(2, 2, 1).is_zero());
  CHECK(figure8_hypersurface(Cyc(2) * w, Cyc(2) * w * w, 1).is_zero());
  CHECK(figure8_hypersurface(0, 0, 0) == Cyc(5));
}

TEST_CASE("D(3,3,4) pullbacks") {
  for (const auto& d : dyck334_samples()) {
    Representation r = dyck334_pullback(d);
    auto c = figure8_coordinates(r, Figure8Table::ChiT);
    CHECK(figure8_hypersurface(c[0], c[1], c[2]).is_zero());
    auto h = figure8_coordinates(dyck334_pullback(d, true), Figure8Table::ChiTInv);
    CHECK(figure8_hypersurface(h[0], h[1], h[2]).is_zero());
    AutomorphismReport a = figure8_automorphism_check(r);
    CHECK(a.relators_preserved);
    CHECK(a.meridian_inverted);
    CHECK(a.longitude_preserved);
  }
  AutomorphismReport t = figure8_automorphism_check(trivial_rep(figure8_presentation(), 3));
  CHECK(t.relators_preserved);
  CHECK(t.meridian_inverted);
  CHECK(t.longitude_preserved);
}

TEST_CASE("torus knot patterns") {
  CHECK(torus_knot_patterns(3).size() == 1);
  CHECK(torus_knot_patterns(5).size() == 6);
  CHECK(torus_knot_patterns(7).size() == 15);
  CHECK_THROWS(torus_knot_presentation(4));
}
