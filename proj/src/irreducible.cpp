#include <deque>

#include "repvar/reps.hpp"

namespace repvar {

namespace {

Vector flatten(const Matrix& m) { return m.entries(); }

// Incremental echelon basis: each stored row has a leading 1 at its pivot and
// zeros at all earlier pivots.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t len) : len_(len) {}

  bool add(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Cyc& c = v[piv_[k]];
      if (c.is_zero()) continue;
      Cyc f = c;
      for (std::size_t j = 0; j < len_; ++j)
        if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < len_ && v[p].is_zero()) ++p;
    if (p == len_) return false;
    Cyc inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // keep earlier rows reduced at the new pivot
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      Cyc f = row[p];
      for (std::size_t j = 0; j < len_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  std::size_t len_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> piv_;
};

Matrix columns_of(const std::vector<Vector>& vs, std::size_t n) {
  Matrix m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return m;
}

// Basis of the column space of m.
Matrix column_space(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  std::vector<Vector> cols;
  for (auto c : piv) cols.push_back(m.col(c));
  return columns_of(cols, m.rows());
}

// Monic minimal polynomial of x, constant term first.
Vector minimal_polynomial(const Matrix& x) {
  std::size_t n = x.rows();
  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * x);
    // solve powers[k] = -sum c_i powers[i]
    Matrix a(n * n, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t e = 0; e < n * n; ++e) a(e, i) = powers[i].entries()[e];
    Vector rhs = flatten(powers[k]);
    if (auto sol = solve(a, rhs)) {
      Vector poly(k + 1);
      for (std::size_t i = 0; i < k; ++i) poly[i] = -(*sol)[i];
      poly[k] = Cyc(1);
      return poly;
    }
  }
  return {};
}

Cyc poly_eval(const Vector& p, const Cyc& x) {
  Cyc acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

void divisors(mpz_class v, std::vector<mpz_class>& out) {
  v = abs(v);
  if (v == 0 || v > 1000000) return;
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
}

// A root of p inside Q(zeta_order), found by the quadratic formula or by the
// rational root test; nullopt when neither applies.
std::optional<Cyc> find_root(const Vector& p, long order) {
  if (p.size() == 2) return -p[0] / p[1];
  if (p.size() == 3) {
    Cyc disc = p[1] * p[1] - Cyc(4) * p[0] * p[2];
    try {
      Cyc s = sqrt_in_field(disc, order);
      return (-p[1] + s) / (Cyc(2) * p[2]);
    } catch (const UnrepresentableInput&) {
      return std::nullopt;
    }
  }
  for (const auto& c : p)
    if (!c.is_rational()) return std::nullopt;
  mpz_class lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational_part().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c.rational_part() * lcm_den));
  if (ints[0] == 0) return Cyc(0);
  std::vector<mpz_class> num, den;
  divisors(ints[0], num);
  divisors(ints.back(), den);
  for (const auto& a : num)
    for (const auto& b : den)
      for (int sign : {1, -1}) {
        Cyc x(Rational(sign * a, b));
        if (poly_eval(p, x).is_zero()) return x;
      }
  return std::nullopt;
}

}  // namespace

IrreducibilityResult is_irreducible(const Representation& r) {
  IrreducibilityResult res;
  std::size_t n = r.rank();
  int gens = r.presentation().generator_count();

  // Span of the generated algebra, grown breadth-first by left multiplication.
  EchelonSpan span(n * n);
  std::vector<Matrix> basis;
  std::deque<std::size_t> queue;
  span.add(flatten(Matrix::identity(n)));
  basis.push_back(Matrix::identity(n));
  res.spanning_words.push_back(Word());
  queue.push_back(0);
  while (!queue.empty() && span.dim() < n * n) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (int g = 0; g < gens && span.dim() < n * n; ++g) {
      Matrix m = r.image(g) * basis[at];
      if (!span.add(flatten(m))) continue;
      basis.push_back(m);
      res.spanning_words.push_back(Word::gen(g) * res.spanning_words[at]);
      queue.push_back(basis.size() - 1);
    }
  }
  res.algebra_dim = span.dim();
  res.irreducible = res.algebra_dim == n * n;
  if (res.irreducible || n == 0) return res;

  // Radical of the algebra: kernel of the trace form.  A nonzero radical R
  // gives the proper invariant subspace R V.
  std::size_t m = basis.size();
  Matrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) gram(i, j) = gram(j, i) = (basis[i] * basis[j]).trace();
  auto rad = kernel_basis(gram);
  if (!rad.empty()) {
    std::vector<Matrix> parts;
    for (const auto& c : rad) {
      Matrix x(n, n);
      for (std::size_t i = 0; i < m; ++i)
        if (!c[i].is_zero()) x += c[i] * basis[i];
      parts.push_back(x);
    }
    res.invariant_subspace = column_space(hstack(parts));
    return res;
  }

  // Semisimple but not the full matrix algebra: the commutant is larger than
  // the scalars, and an eigenspace of a non-scalar commuting matrix is invariant.
  std::vector<Matrix> eqs;
  Matrix id = Matrix::identity(n);
  for (int g = 0; g < gens; ++g) eqs.push_back(kronecker(id, r.image(g).transpose()) - kronecker(r.image(g), id));
  auto comm = kernel_basis(vstack(eqs));
  std::vector<Matrix> candidates;
  for (const auto& v : comm) candidates.emplace_back(n, n, v);
  for (std::size_t i = 0; i + 1 < comm.size(); ++i) candidates.push_back(candidates[i] + candidates[i + 1]);
  for (const auto& x : candidates) {
    if (x.is_scalar()) continue;
    Vector mp = minimal_polynomial(x);
    if (auto mu = find_root(mp, r.order())) {
      auto ker = kernel_basis(x - *mu * id);
      if (!ker.empty() && ker.size() < n) {
        res.invariant_subspace = columns_of(ker, n);
        return res;
      }
    }
  }
  res.witness_outside_field = true;
  return res;
}

}  // namespace repvar
