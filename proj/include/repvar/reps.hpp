#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repvar/linalg.hpp"
#include "repvar/words.hpp"

namespace repvar {

class RelationViolated : public Error {
 public:
  RelationViolated(std::size_t relator, Matrix defect)
      : Error("RelationViolated: relator " + std::to_string(relator + 1) +
              " evaluates to " + defect.str() + " instead of the identity"),
        relator_(relator), defect_(std::move(defect)) {}
  const char* kind() const noexcept override { return "RelationViolated"; }
  std::size_t relator() const { return relator_; }
  // evaluate(r) - I
  const Matrix& defect() const { return defect_; }

 private:
  std::size_t relator_;
  Matrix defect_;
};

class CocycleConditionViolated : public Error {
 public:
  explicit CocycleConditionViolated(std::size_t relator)
      : Error("CocycleConditionViolated: relator " + std::to_string(relator + 1)), relator_(relator) {}
  const char* kind() const noexcept override { return "CocycleConditionViolated"; }
  std::size_t relator() const { return relator_; }

 private:
  std::size_t relator_;
};

// A verified homomorphism from a finitely presented group into GL_n.
// The determinant target is a character: det image(g) = target^phi(g) when the
// presentation carries phi, and det image(g) = target otherwise.  Target 1 is SL_n.
class Representation {
 public:
  const Presentation& presentation() const { return p_; }
  std::size_t rank() const { return n_; }
  const std::vector<Matrix>& images() const { return images_; }
  const Matrix& image(int g) const { return images_[g]; }
  const Matrix& inverse_image(int g) const { return inverses_[g]; }
  const Cyc& determinant_target() const { return det_; }
  // Field order that holds every entry.
  long order() const { return order_; }

  friend Representation make_rep(const Presentation&, std::vector<Matrix>, const Cyc&);

 private:
  Presentation p_;
  std::size_t n_ = 0;
  std::vector<Matrix> images_, inverses_;
  Cyc det_{1};
  long order_ = 1;
};

// Verifies shapes, determinants and relators.
Representation make_rep(const Presentation& p, std::vector<Matrix> images, const Cyc& det_target = Cyc(1));

Matrix evaluate(const Representation& r, const Word& w);

// Smallest order holding every entry of the given matrices.
long matrices_order(const std::vector<Matrix>& ms);

Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor(const Representation& a, const Representation& b);
Representation dual(const Representation& r);
// S r S^-1
Representation conjugate(const Representation& r, const Matrix& s);
// Multiplies image(g) by lambda^(weight * phi(g)).
Representation twist_by_character(const Representation& r, const Cyc& lambda, long weight);
// Rank-one representation g -> lambda^phi(g).
Representation one_dim(const Presentation& p, const Cyc& lambda);
Representation trivial_rep(const Presentation& p, std::size_t n = 1);

// Action of a 2x2 matrix on binary forms of degree n-1, basis u^(n-1), u^(n-2) v, ..., v^(n-1).
Matrix sym_power_matrix(const Matrix& g, std::size_t n);
Representation sym_power(const Representation& r, std::size_t n);

// sl(n) basis: E_ij (i != j) in lexicographic order, then H_k = E_kk - E_k+1,k+1.
std::vector<Matrix> sl_basis(std::size_t n);
// Coordinates of a trace-zero matrix in sl_basis; NonzeroTrace otherwise.
Vector sl_coords(const Matrix& x);
Matrix sl_matrix(const Vector& coords, std::size_t n);
// Matrix of X -> g X g^-1 on sl(n).
Matrix adjoint_matrix(const Matrix& g);
Matrix adjoint_module_action(const Representation& r, const Word& w);

struct Character {
  std::vector<Word> base_words;
  std::vector<Cyc> values;
};
Character character_of(const Representation& r, const std::vector<Word>& words);

struct IrreducibilityResult {
  bool irreducible = false;
  std::size_t algebra_dim = 0;
  // Words whose images span the generated algebra.
  std::vector<Word> spanning_words;
  // Columns span a proper invariant subspace, when one was found over the field.
  std::optional<Matrix> invariant_subspace;
  // Set when the verdict is "reducible" but no invariant subspace is defined
  // over the working field (it exists over an extension).
  bool witness_outside_field = false;
};

// Burnside test: irreducible iff the images span all of M_n.
IrreducibilityResult is_irreducible(const Representation& r);

// A group acting linearly on K^dim through matrices attached to generators.
struct ModuleAction {
  std::size_t dim = 0;
  std::vector<Matrix> act, act_inv;
  Matrix of(const Word& w) const;
};

ModuleAction ad_action(const Representation& r);   // sl(n) by conjugation
ModuleAction rep_action(const Representation& r);  // the representation space itself

// Relator Jacobian: block (j, i) is the action of the Fox derivative d r_j / d x_i.
// A cochain z (generator values stacked) is a cocycle iff jacobian * z = 0.
Matrix fox_jacobian(const Presentation& p, const ModuleAction& m);

// Splits a stacked cochain into one vector per generator.
std::vector<Vector> split_cochain(const Vector& v, std::size_t gens, std::size_t dim);
Vector stack_cochain(const std::vector<Vector>& parts);

// Metabelian representations.
Matrix jordan_block(std::size_t n);  // J_n = I + N_n
Matrix p_matrix(std::size_t n);      // p_ij = (-1)^j binom(j, i), indices from 1

// g acts on row vectors by z -> alpha^phi(g) z J_(n-1)^phi(g); stored as the
// matrix acting on the transposed column vector.
ModuleAction metabelian_action(const Presentation& p, const Cyc& alpha, std::size_t n);

// Basis of assignments g -> z(g) in K^(n-1) (concatenated) satisfying
// z(g1 g2) = z(g1) + alpha^phi(g1) z(g2) J^phi(g1) on every relator.
std::vector<Vector> solve_metabelian_cocycles(const Presentation& p, const Cyc& alpha, std::size_t n);

// g -> (1, z(g); 0, I) (alpha^phi, 0; 0, J^-phi).  Determinant target alpha.
Representation build_metabelian(const Presentation& p, const Cyc& alpha, std::size_t n,
                                const std::vector<Vector>& z);
// Conjugation by diag(1, P_(n-1)) into the upper-triangular (alpha^h, z; 0, J^h) form.
Representation metabelian_gln_form(const Representation& r);
// gamma -> lambda^-phi(gamma) r(gamma); requires lambda^n = alpha.
Representation metabelian_sl(const Representation& r, const Cyc& alpha, const Cyc& lambda);

}  // namespace repvar
