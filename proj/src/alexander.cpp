#include "repvar/alexander.hpp"

namespace repvar {

namespace {

LaurentMatrix twisted(const Matrix& a, long e) {
  LaurentMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) m(i, j) = LaurentPoly::monomial(e, a(i, j));
  return m;
}

void add_block(LaurentMatrix& dst, std::size_t r0, std::size_t c0, const LaurentMatrix& b, int sign) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j).is_zero()) continue;
      if (sign > 0)
        dst(r0 + i, c0 + j) += b(i, j);
      else
        dst(r0 + i, c0 + j) -= b(i, j);
    }
}

// act(x_j) t^phi(x_j) - I
LaurentMatrix boundary_block(const Presentation& p, const ModuleAction& m, int j) {
  LaurentMatrix b = twisted(m.act[j], (*p.abelianization)[j]);
  for (std::size_t i = 0; i < m.dim; ++i) b(i, i) -= LaurentPoly(1);
  return b;
}

}  // namespace

TwistedFoxMatrix twisted_fox_matrix(const Presentation& p, const ModuleAction& m) {
  if (!p.abelianization) throw MissingAbelianization("twisted Fox matrix needs the abelianization");
  const auto& phi = *p.abelianization;
  std::size_t d = m.dim, gens = p.generator_count();
  std::vector<LaurentMatrix> fwd, bwd;
  for (std::size_t g = 0; g < gens; ++g) {
    fwd.push_back(twisted(m.act[g], phi[g]));
    bwd.push_back(twisted(m.act_inv[g], -phi[g]));
  }
  TwistedFoxMatrix out;
  out.module_dim = d;
  out.generator_count = gens;
  out.matrix = LaurentMatrix(p.relators.size() * d, gens * d);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    LaurentMatrix prefix(Matrix::identity(d));
    for (const auto& x : p.relators[j].letters()) {
      if (x.exp > 0) {
        add_block(out.matrix, j * d, x.gen * d, prefix, +1);
        prefix = prefix * fwd[x.gen];
      } else {
        prefix = prefix * bwd[x.gen];
        add_block(out.matrix, j * d, x.gen * d, prefix, -1);
      }
    }
  }
  return out;
}

TwistedFoxMatrix twisted_fox_matrix(const Representation& r) {
  return twisted_fox_matrix(r.presentation(), rep_action(r));
}

AlexanderData alexander_polynomials(const Presentation& p, const ModuleAction& m, std::optional<int> column) {
  TwistedFoxMatrix fox = twisted_fox_matrix(p, m);
  std::size_t d = m.dim, gens = p.generator_count(), rows = fox.matrix.rows();
  AlexanderData out;
  if (gens == 0) throw NoDeletableColumn("presentation has no generators");

  std::vector<LaurentMatrix> blocks;
  std::vector<LaurentPoly> dets;
  for (std::size_t g = 0; g < gens; ++g) {
    blocks.push_back(boundary_block(p, m, static_cast<int>(g)));
    dets.push_back(blocks.back().det());
  }
  int j = -1;
  if (column) {
    if (*column < 0 || *column >= static_cast<int>(gens)) throw NoDeletableColumn("column out of range");
    if (dets[*column].is_zero()) throw NoDeletableColumn("chosen column has vanishing determinant");
    j = *column;
  } else {
    for (std::size_t g = 0; g < gens && j < 0; ++g)
      if (!dets[g].is_zero()) j = static_cast<int>(g);
    if (j < 0) throw NoDeletableColumn("every act(x) t^phi(x) - I is singular");
  }
  out.column_deleted = j;

  LaurentMatrix boundary(d, gens * d);
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) boundary(a, g * d + b) = blocks[g](a, b);
  out.delta0 = maximal_minors_gcd(boundary);

  std::vector<std::size_t> all_rows(rows), kept;
  for (std::size_t i = 0; i < rows; ++i) all_rows[i] = i;
  for (std::size_t c = 0; c < gens * d; ++c)
    if (c / d != static_cast<std::size_t>(j)) kept.push_back(c);
  LaurentMatrix reduced = fox.matrix.select(all_rows, kept);
  LaurentPoly ord;
  if (kept.empty())
    ord = LaurentPoly(1);
  else if (rows < kept.size())
    ord = LaurentPoly();  // free part, order ideal is zero
  else
    ord = maximal_minors_gcd(reduced);
  out.delta1 = ord.is_zero() ? ord : (ord * out.delta0 / dets[j]).normalized();
  return out;
}

AlexanderData alexander_polynomials(const Representation& r, std::optional<int> column) {
  return alexander_polynomials(r.presentation(), rep_action(r), column);
}

LaurentPoly alexander_polynomial(const Presentation& p) { return alexander_polynomials(trivial_rep(p)).delta1; }

RootVerdict root_verdict(const LaurentPoly& delta, const Cyc& x) {
  RootVerdict v;
  v.point = x;
  v.value = laurent_eval(delta, x);
  v.is_root = v.value.is_zero() && !delta.is_zero();
  v.is_simple_root = v.is_root && !laurent_eval(delta.derivative(), x).is_zero();
  return v;
}

RootVerdict deformation_condition_n2(const Presentation& p, const Cyc& lambda) {
  if (lambda.is_zero()) throw EvalAtZero("lambda must be nonzero");
  return root_verdict(alexander_polynomial(p), lambda * lambda);
}

GeneralVerdict deformation_condition_general(const Representation& alpha, const Representation& beta,
                                             const Cyc& lambda) {
  if (!(alpha.presentation() == beta.presentation()))
    throw PresentationMismatch("alpha and beta use different presentations");
  if (lambda.is_zero()) throw EvalAtZero("lambda must be nonzero");
  if (!is_irreducible(alpha).irreducible) throw NotIrreducible("alpha is reducible");
  if (!is_irreducible(beta).irreducible) throw NotIrreducible("beta is reducible");
  long n = static_cast<long>(alpha.rank() + beta.rank());
  GeneralVerdict v;
  v.delta_ab = alexander_polynomials(tensor(alpha, dual(beta))).delta1;
  v.delta_ba = alexander_polynomials(tensor(beta, dual(alpha))).delta1;
  v.at_ab = root_verdict(v.delta_ab, lambda.pow(n));
  v.at_ba = root_verdict(v.delta_ba, lambda.pow(-n));
  v.duality_holds = associated(v.delta_ab, v.delta_ba.invert_variable());
  return v;
}

}  // namespace repvar
