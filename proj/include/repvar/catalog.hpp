#pragma once

#include <string>
#include <utility>
#include <vector>

#include "repvar/alexander.hpp"
#include "repvar/cohomology.hpp"

namespace repvar {

// Presentations.
Presentation trefoil_presentation();      // <x, y | x^2 = y^3>, phi = (3, 2)
Presentation figure8_presentation();      // <t, a, b | t a t^-1 = a b, t b t^-1 = b a b>
Presentation dyck333_presentation();      // <a, b | a^3, b^3, (ab)^3>
Presentation dyck334_presentation();      // <k, l | l^3, k^3, (kl)^4>
Presentation lubotzky_magid_presentation();
Presentation torus_knot_presentation(long p);  // <x, y | x^2 = y^p>, p odd

// Trefoil.
Representation trefoil_alpha_s(const Cyc& s);               // SL(2), field order 12
Representation trefoil_rho_st(const Cyc& s, const Cyc& t);  // SL(3)
Representation diagonal_rep_n2(const Presentation& p, const Cyc& lambda);  // lambda^phi + lambda^-phi
// lim_{t -> 0} P(t) alpha_0 P(t)^-1 for P(t) = diag(t, t^-1), computed over K[t, t^-1].
Representation trefoil_alpha0_limit();
// Central representation gamma -> zeta^phi(gamma) I_n.
Representation central_rep(const Presentation& p, std::size_t n, const Cyc& zeta);
// gamma -> diag(lambdas)^phi(gamma).
Representation diagonal_rep(const Presentation& p, const std::vector<Cyc>& lambdas);

// D(3,3,3).
Representation dyck333_rho0();
std::vector<Matrix> dyck333_z1();
std::vector<Matrix> dyck333_z2();

// Lubotzky-Magid group.
Representation lubotzky_magid_rho();
Representation lubotzky_magid_rho_prime();
std::vector<Matrix> lubotzky_magid_z();

// Figure-eight knot and D(3,3,4).
Cyc figure8_hypersurface(const Cyc& nu, const Cyc& nubar, const Cyc& zeta);
// Images of t, a, b under the amphicheiral automorphism h.
std::vector<Word> figure8_automorphism();
// Images of t, a, b under the epimorphism onto D(3,3,4).
std::vector<Word> figure8_to_dyck334();

struct AutomorphismReport {
  bool relators_preserved = false;     // h(r) maps to the identity for each relator r
  bool meridian_inverted = false;      // chi(h(t)) = chi(t^-1)
  bool longitude_preserved = false;    // chi(h([a, b])) = chi([a, b])
};
AutomorphismReport figure8_automorphism_check(const Representation& r);

// D(3,3,4) representations with the traces of the two-dimensional component.
Representation dyck334_rep(const Matrix& l);
std::vector<Representation> dyck334_samples();
// Pullback along the epimorphism, optionally precomposed with h.
Representation dyck334_pullback(const Representation& d334, bool precompose_h = false);

// (nu, nubar, zeta) coordinates on a figure-eight representation.
enum class Figure8Table {
  ChiT,     // (chi(t), chi(t^-1), chi(a))
  ChiTInv,  // (chi(t^-1), chi(t), chi(b^-1))
};
std::vector<Cyc> figure8_coordinates(const Representation& r, Figure8Table table);
// (chi(k^-1 l), chi(k l^-1), chi([k, l])) on a D(3,3,4) representation.
std::vector<Cyc> dyck334_coordinates(const Representation& r);

// Torus knots T(p, 2): irreducible SL(3) representatives, one per eigenvalue pattern.
std::vector<Representation> torus_knot_patterns(long p);

// Catalog entries and their assertion suites.
struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct CatalogEntry {
  std::string id;
  Presentation presentation;
  long field_order = 1;
  std::vector<std::pair<std::string, Representation>> representations;
};

std::vector<std::string> catalog_ids();
CatalogEntry entry(const std::string& id);
std::vector<Assertion> run_entry(const std::string& id);

}  // namespace repvar
