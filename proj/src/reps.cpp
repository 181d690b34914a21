#include "repvar/reps.hpp"

#include <numeric>

namespace repvar {

namespace {

Cyc det_expected(const Presentation& p, const Cyc& target, int g) {
  if (!p.abelianization) return target;
  return target.pow((*p.abelianization)[g]);
}

void require_same(const Representation& a, const Representation& b) {
  if (!(a.presentation() == b.presentation()))
    throw PresentationMismatch("representations are defined on different presentations");
}

long phi_of(const Presentation& p, int g) {
  if (!p.abelianization) throw MissingAbelianization("presentation has no abelianization data");
  return (*p.abelianization)[g];
}

}  // namespace

long matrices_order(const std::vector<Matrix>& ms) {
  long o = 1;
  for (const auto& m : ms)
    for (const auto& x : m.entries())
      if (!x.is_rational()) o = std::lcm(o, x.order());
  return o;
}

Representation make_rep(const Presentation& p, std::vector<Matrix> images, const Cyc& det_target) {
  if (static_cast<int>(images.size()) != p.generator_count())
    throw DimensionMismatch("need one image per generator");
  std::size_t n = images.empty() ? 0 : images[0].rows();
  for (const auto& m : images)
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("images must be square of equal size");
  if (det_target.is_zero()) throw DeterminantMismatch("determinant target must be nonzero");
  Representation r;
  r.p_ = p;
  r.n_ = n;
  r.det_ = det_target;
  for (int g = 0; g < p.generator_count(); ++g) {
    Cyc d = images[g].det();
    Cyc want = det_expected(p, det_target, g);
    if (d != want)
      throw DeterminantMismatch("generator " + p.generator_names[g] + " has determinant " + d.str() +
                                ", expected " + want.str());
  }
  r.inverses_.reserve(images.size());
  for (const auto& m : images) r.inverses_.push_back(m.inverse());
  r.images_ = std::move(images);
  r.order_ = matrices_order(r.images_);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    Matrix v = evaluate(r, p.relators[j]);
    if (!v.is_identity()) throw RelationViolated(j, v - Matrix::identity(n));
  }
  return r;
}

Matrix evaluate(const Representation& r, const Word& w) {
  Matrix m = Matrix::identity(r.rank());
  for (const auto& x : w.letters()) m = m * (x.exp > 0 ? r.image(x.gen) : r.inverse_image(x.gen));
  return m;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same(a, b);
  std::vector<Matrix> im;
  for (std::size_t g = 0; g < a.images().size(); ++g) im.push_back(block_diag(a.images()[g], b.images()[g]));
  return make_rep(a.presentation(), std::move(im), a.determinant_target() * b.determinant_target());
}

Representation tensor(const Representation& a, const Representation& b) {
  require_same(a, b);
  std::vector<Matrix> im;
  for (std::size_t g = 0; g < a.images().size(); ++g) im.push_back(kronecker(a.images()[g], b.images()[g]));
  Cyc target = a.determinant_target().pow(static_cast<long>(b.rank())) *
               b.determinant_target().pow(static_cast<long>(a.rank()));
  return make_rep(a.presentation(), std::move(im), target);
}

Representation dual(const Representation& r) {
  std::vector<Matrix> im;
  for (int g = 0; g < r.presentation().generator_count(); ++g) im.push_back(r.inverse_image(g).transpose());
  return make_rep(r.presentation(), std::move(im), r.determinant_target().inverse());
}

Representation conjugate(const Representation& r, const Matrix& s) {
  Matrix si = s.inverse();
  std::vector<Matrix> im;
  for (const auto& m : r.images()) im.push_back(s * m * si);
  return make_rep(r.presentation(), std::move(im), r.determinant_target());
}

Representation twist_by_character(const Representation& r, const Cyc& lambda, long weight) {
  const Presentation& p = r.presentation();
  if (!p.abelianization) throw MissingAbelianization("twisting needs the abelianization");
  if (lambda.is_zero()) throw DivisionByZero("twist by zero");
  std::vector<Matrix> im;
  for (int g = 0; g < p.generator_count(); ++g)
    im.push_back(lambda.pow(weight * phi_of(p, g)) * r.image(g));
  Cyc target = r.determinant_target() * lambda.pow(weight * static_cast<long>(r.rank()));
  return make_rep(p, std::move(im), target);
}

Representation one_dim(const Presentation& p, const Cyc& lambda) {
  return twist_by_character(trivial_rep(p, 1), lambda, 1);
}

Representation trivial_rep(const Presentation& p, std::size_t n) {
  return make_rep(p, std::vector<Matrix>(p.generator_count(), Matrix::identity(n)));
}

// ---------------------------------------------------------------------------

Matrix sym_power_matrix(const Matrix& g, std::size_t n) {
  if (g.rows() != 2 || g.cols() != 2) throw RankNotTwo("symmetric powers need a 2x2 matrix");
  if (n == 0) throw DimensionMismatch("symmetric power of dimension 0");
  std::size_t m = n - 1;
  // binary forms as coefficient vectors indexed by the power of v
  auto mul = [](const Vector& a, const Vector& b) {
    Vector out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  Vector u_img{g(0, 0), g(1, 0)}, v_img{g(0, 1), g(1, 1)};
  Matrix out(n, n);
  for (std::size_t k = 0; k <= m; ++k) {
    Vector f{Cyc(1)};
    for (std::size_t i = 0; i < m - k; ++i) f = mul(f, u_img);
    for (std::size_t i = 0; i < k; ++i) f = mul(f, v_img);
    for (std::size_t i = 0; i <= m; ++i) out(i, k) = f[i];
  }
  return out;
}

Representation sym_power(const Representation& r, std::size_t n) {
  if (r.rank() != 2) throw RankNotTwo("symmetric powers need a rank-2 representation");
  std::vector<Matrix> im;
  for (const auto& m : r.images()) im.push_back(sym_power_matrix(m, n));
  long e = static_cast<long>(n * (n - 1) / 2);
  return make_rep(r.presentation(), std::move(im), r.determinant_target().pow(e));
}

// ---------------------------------------------------------------------------

std::vector<Matrix> sl_basis(std::size_t n) {
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e(n, n);
      e(i, j) = Cyc(1);
      b.push_back(std::move(e));
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Matrix h(n, n);
    h(k, k) = Cyc(1);
    h(k + 1, k + 1) = Cyc(-1);
    b.push_back(std::move(h));
  }
  return b;
}

Vector sl_coords(const Matrix& x) {
  if (!x.is_square()) throw DimensionMismatch("sl coordinates of a non-square matrix");
  if (!x.trace().is_zero()) throw NonzeroTrace("matrix is not in sl(n)");
  std::size_t n = x.rows();
  Vector v;
  v.reserve(n * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) v.push_back(x(i, j));
  Cyc partial;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    partial += x(k, k);
    v.push_back(partial);
  }
  return v;
}

Matrix sl_matrix(const Vector& c, std::size_t n) {
  if (c.size() != n * n - 1) throw DimensionMismatch("wrong number of sl coordinates");
  Matrix x(n, n);
  std::size_t at = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) x(i, j) = c[at++];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    x(k, k) += c[at];
    x(k + 1, k + 1) -= c[at];
    ++at;
  }
  return x;
}

Matrix adjoint_matrix(const Matrix& g) {
  std::size_t n = g.rows();
  Matrix gi = g.inverse();
  auto basis = sl_basis(n);
  Matrix out(n * n - 1, n * n - 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Vector c = sl_coords(g * basis[k] * gi);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, k) = c[i];
  }
  return out;
}

Matrix adjoint_module_action(const Representation& r, const Word& w) {
  return adjoint_matrix(evaluate(r, w));
}

Character character_of(const Representation& r, const std::vector<Word>& words) {
  Character c;
  c.base_words = words;
  for (const auto& w : words) c.values.push_back(evaluate(r, w).trace());
  return c;
}

// ---------------------------------------------------------------------------

Matrix ModuleAction::of(const Word& w) const {
  Matrix m = Matrix::identity(dim);
  for (const auto& x : w.letters()) m = m * (x.exp > 0 ? act[x.gen] : act_inv[x.gen]);
  return m;
}

ModuleAction ad_action(const Representation& r) {
  ModuleAction m;
  m.dim = r.rank() * r.rank() - 1;
  for (int g = 0; g < r.presentation().generator_count(); ++g) {
    m.act.push_back(adjoint_matrix(r.image(g)));
    m.act_inv.push_back(adjoint_matrix(r.inverse_image(g)));
  }
  return m;
}

ModuleAction rep_action(const Representation& r) {
  ModuleAction m;
  m.dim = r.rank();
  m.act = r.images();
  for (int g = 0; g < r.presentation().generator_count(); ++g) m.act_inv.push_back(r.inverse_image(g));
  return m;
}

Matrix fox_jacobian(const Presentation& p, const ModuleAction& m) {
  std::size_t d = m.dim, gens = p.generator_count();
  Matrix jac(p.relators.size() * d, gens * d);
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    // running image of the prefix; each letter contributes +prefix or -prefix*x^-1
    Matrix prefix = Matrix::identity(d);
    for (const auto& x : p.relators[j].letters()) {
      Matrix blk = jac.block(j * d, x.gen * d, d, d);
      if (x.exp > 0) {
        blk += prefix;
        prefix = prefix * m.act[x.gen];
      } else {
        prefix = prefix * m.act_inv[x.gen];
        blk -= prefix;
      }
      jac.set_block(j * d, x.gen * d, blk);
    }
  }
  return jac;
}

std::vector<Vector> split_cochain(const Vector& v, std::size_t gens, std::size_t dim) {
  if (v.size() != gens * dim) throw DimensionMismatch("cochain length does not match generators x dim");
  std::vector<Vector> out;
  for (std::size_t g = 0; g < gens; ++g) out.emplace_back(v.begin() + g * dim, v.begin() + (g + 1) * dim);
  return out;
}

Vector stack_cochain(const std::vector<Vector>& parts) {
  Vector v;
  for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  return v;
}

// ---------------------------------------------------------------------------

Matrix jordan_block(std::size_t n) {
  Matrix j = Matrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = Cyc(1);
  return j;
}

Matrix p_matrix(std::size_t n) {
  Matrix p(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), j, i);
      p(i - 1, j - 1) = Cyc(Rational(j % 2 ? -b : b));
    }
  return p;
}

ModuleAction metabelian_action(const Presentation& p, const Cyc& alpha, std::size_t n) {
  if (n < 2) throw DimensionMismatch("metabelian representations need n >= 2");
  if (alpha.is_zero()) throw DivisionByZero("alpha must be nonzero");
  ModuleAction m;
  m.dim = n - 1;
  Matrix jt = jordan_block(n - 1).transpose();
  for (int g = 0; g < p.generator_count(); ++g) {
    long e = phi_of(p, g);
    m.act.push_back(alpha.pow(e) * jt.pow(e));
    m.act_inv.push_back(alpha.pow(-e) * jt.pow(-e));
  }
  return m;
}

std::vector<Vector> solve_metabelian_cocycles(const Presentation& p, const Cyc& alpha, std::size_t n) {
  return kernel_basis(fox_jacobian(p, metabelian_action(p, alpha, n)));
}

Representation build_metabelian(const Presentation& p, const Cyc& alpha, std::size_t n,
                                const std::vector<Vector>& z) {
  ModuleAction act = metabelian_action(p, alpha, n);
  if (static_cast<int>(z.size()) != p.generator_count())
    throw DimensionMismatch("need one cocycle value per generator");
  for (const auto& v : z)
    if (v.size() != n - 1) throw DimensionMismatch("cocycle values must have length n-1");
  Vector defect = fox_jacobian(p, act) * stack_cochain(z);
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (std::size_t k = 0; k < n - 1; ++k)
      if (!defect[j * (n - 1) + k].is_zero()) throw CocycleConditionViolated(j);
  Matrix jb = jordan_block(n - 1);
  std::vector<Matrix> im;
  for (int g = 0; g < p.generator_count(); ++g) {
    long e = phi_of(p, g);
    Matrix jinv = jb.pow(-e);
    Matrix m(n, n);
    m(0, 0) = alpha.pow(e);
    Matrix zrow(1, n - 1, z[g]);
    m.set_block(0, 1, zrow * jinv);
    m.set_block(1, 1, jinv);
    im.push_back(std::move(m));
  }
  return make_rep(p, std::move(im), alpha);
}

Representation metabelian_gln_form(const Representation& r) {
  std::size_t n = r.rank();
  Matrix q = block_diag(Matrix::identity(1), p_matrix(n - 1));
  return conjugate(r, q);
}

Representation metabelian_sl(const Representation& r, const Cyc& alpha, const Cyc& lambda) {
  if (lambda.pow(static_cast<long>(r.rank())) != alpha)
    throw RootMismatch("lambda^n differs from alpha");
  return twist_by_character(r, lambda, -1);
}

}  // namespace repvar
