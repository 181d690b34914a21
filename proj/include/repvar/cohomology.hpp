#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repvar/reps.hpp"

namespace repvar {

// Coefficient module for cohomology of the group of a representation.
struct ModuleSpec {
  enum class Kind { AdSl, AdGl, OneDim, Hom, Metabelian };
  Kind kind = Kind::AdSl;
  Cyc scalar{1};                       // lambda for OneDim, alpha for Metabelian
  std::size_t n = 0;                   // Metabelian rank
  std::optional<Representation> alpha, beta;  // Hom: X -> alpha X beta^-1

  static ModuleSpec ad_sl() { return {}; }
  static ModuleSpec ad_gl();
  static ModuleSpec one_dim(const Cyc& lambda);
  static ModuleSpec hom(const Representation& a, const Representation& b);
  static ModuleSpec metabelian(const Cyc& alpha, std::size_t n);
  std::string str() const;
};

// The module as generator matrices over the presentation of r.
ModuleAction module_action(const Representation& r, const ModuleSpec& m);

struct CocycleSpace {
  std::size_t module_dim = 0;
  std::size_t generator_count = 0;
  Matrix relator_jacobian;
  std::vector<Vector> basis;  // stacked generator values

  std::size_t dim() const { return basis.size(); }
  // z satisfies every relator equation.
  bool contains(const Vector& z) const;
};

CocycleSpace cocycle_space(const Presentation& p, const ModuleAction& m);
CocycleSpace cocycle_space(const Representation& r, const ModuleSpec& m = ModuleSpec::ad_sl());

struct CohomologyReport {
  std::size_t h0 = 0, z1 = 0, b1 = 0, h1 = 0;
  // Degree-2 cohomology of the presentation 2-complex; equals group cohomology
  // only for aspherical presentations.
  std::size_t h2_complex = 0;
  std::string module;
};

CohomologyReport cohomology_dims(const Presentation& p, const ModuleAction& m);
CohomologyReport cohomology_dims(const Representation& r, const ModuleSpec& m = ModuleSpec::ad_sl());

struct RegularityVerdict {
  bool infinitesimally_regular = false;
  // Smooth point: infinitesimally regular, or dim Z^1 matches a certified lower
  // bound on the local dimension.
  bool regular = false;
  std::size_t h0 = 0, z1 = 0, h1 = 0, expected_h1 = 0;
  long predicted_component_dim = -1;  // -1 when regularity is not established
  std::optional<std::size_t> certified_local_dim;
  std::string certificate;
};

// k is the number of boundary tori.
RegularityVerdict check_infinitesimal_regularity(const Representation& r, std::size_t k);

// u(g) = X - Ad_rho(g)(X) on generators, one matrix per generator.
std::vector<Matrix> coboundary_of(const Representation& r, const Matrix& x);

// Stacked sl coordinates of per-generator trace-zero matrices.
Vector sl_cochain(const std::vector<Matrix>& values);
std::vector<Matrix> sl_cochain_matrices(const Vector& v, std::size_t gens, std::size_t n);

// rho_k(g) = exp(sum_i t^i u_i(g)) rho(g), a homomorphism modulo t^(k+1).
struct TruncatedDeformation {
  Representation base;
  std::vector<std::vector<Matrix>> cochains;  // cochains[i-1] = u_i, one matrix per generator
  std::size_t order() const { return cochains.size(); }
};

struct ObstructionResult {
  bool extends = false;
  std::vector<Matrix> extension;  // u_(k+1) when it exists
  Vector defect;                  // stacked t^(k+1) relator defects in sl coordinates
  std::size_t order = 0;          // k + 1
};

ObstructionResult obstruction_step(const TruncatedDeformation& d);

// Power series matrices truncated after t^degree.
using SeriesMatrix = std::vector<Matrix>;
SeriesMatrix series_mul(const SeriesMatrix& a, const SeriesMatrix& b, std::size_t degree);
// Relator images under rho_k, truncated after t^degree.
std::vector<SeriesMatrix> deformed_relators(const TruncatedDeformation& d, std::size_t degree);

struct TangentGapReport {
  std::size_t z1 = 0;
  std::optional<std::size_t> local_dim;
  long gap = 0;
  bool strict = false;  // z1 > local_dim: singular point or non-reduced scheme
};

TangentGapReport tangent_gap_report(const Representation& r, std::optional<std::size_t> known_local_dim);

}  // namespace repvar
