#pragma once

#include <optional>

#include "repvar/reps.hpp"

namespace repvar {

// Relator Jacobian over K[t, t^-1] for the action g -> act(g) t^phi(g).
struct TwistedFoxMatrix {
  std::size_t module_dim = 0;
  std::size_t generator_count = 0;
  LaurentMatrix matrix;  // (relators * d) x (generators * d)
};

TwistedFoxMatrix twisted_fox_matrix(const Presentation& p, const ModuleAction& m);
TwistedFoxMatrix twisted_fox_matrix(const Representation& r);

struct AlexanderData {
  LaurentPoly delta0, delta1;  // normalized
  int column_deleted = -1;
};

// delta0: gcd of maximal minors of [act(x_i) t^phi(x_i) - I]_i.
// delta1: ord(coker A_j) * delta0 / det(act(x_j) t^phi(x_j) - I), where A_j is
// the twisted Fox matrix without the block column of generator j.  By default j
// is the first generator whose determinant is nonzero.
AlexanderData alexander_polynomials(const Presentation& p, const ModuleAction& m,
                                    std::optional<int> column = std::nullopt);
AlexanderData alexander_polynomials(const Representation& r, std::optional<int> column = std::nullopt);

// Classical Alexander polynomial of a presentation with abelianization.
LaurentPoly alexander_polynomial(const Presentation& p);

struct RootVerdict {
  Cyc point;  // where the polynomial was evaluated
  Cyc value;
  bool is_root = false;
  bool is_simple_root = false;
};

RootVerdict root_verdict(const LaurentPoly& delta, const Cyc& x);

// Delta(lambda^2) for the diagonal representation lambda^phi + lambda^-phi.
RootVerdict deformation_condition_n2(const Presentation& p, const Cyc& lambda);

struct GeneralVerdict {
  LaurentPoly delta_ab;  // Delta_1 of alpha (x) beta^*
  LaurentPoly delta_ba;  // Delta_1 of beta (x) alpha^*
  RootVerdict at_ab;     // delta_ab at lambda^n
  RootVerdict at_ba;     // delta_ba at lambda^-n
  bool duality_holds = false;  // delta_ab(t) and delta_ba(t^-1) are associated
};

// n = rank(alpha) + rank(beta).  Both representations must be irreducible.
GeneralVerdict deformation_condition_general(const Representation& alpha, const Representation& beta,
                                             const Cyc& lambda);

}  // namespace repvar
