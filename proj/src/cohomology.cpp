#include "repvar/cohomology.hpp"

namespace repvar {

ModuleSpec ModuleSpec::ad_gl() {
  ModuleSpec m;
  m.kind = Kind::AdGl;
  return m;
}

ModuleSpec ModuleSpec::one_dim(const Cyc& lambda) {
  ModuleSpec m;
  m.kind = Kind::OneDim;
  m.scalar = lambda;
  return m;
}

ModuleSpec ModuleSpec::hom(const Representation& a, const Representation& b) {
  ModuleSpec m;
  m.kind = Kind::Hom;
  m.alpha = a;
  m.beta = b;
  return m;
}

ModuleSpec ModuleSpec::metabelian(const Cyc& alpha, std::size_t n) {
  ModuleSpec m;
  m.kind = Kind::Metabelian;
  m.scalar = alpha;
  m.n = n;
  return m;
}

std::string ModuleSpec::str() const {
  switch (kind) {
    case Kind::AdSl: return "ad-sl";
    case Kind::AdGl: return "ad-gl";
    case Kind::OneDim: return "one-dim:" + scalar.str();
    case Kind::Hom:
      return "hom:" + std::to_string(alpha->rank()) + "," + std::to_string(beta->rank());
    case Kind::Metabelian: return "metabelian:" + scalar.str() + "," + std::to_string(n);
  }
  return "";
}

ModuleAction module_action(const Representation& r, const ModuleSpec& m) {
  const Presentation& p = r.presentation();
  switch (m.kind) {
    case ModuleSpec::Kind::AdSl:
      return ad_action(r);
    case ModuleSpec::Kind::AdGl: {
      ModuleAction a;
      a.dim = r.rank() * r.rank();
      for (int g = 0; g < p.generator_count(); ++g) {
        a.act.push_back(kronecker(r.image(g), r.inverse_image(g).transpose()));
        a.act_inv.push_back(kronecker(r.inverse_image(g), r.image(g).transpose()));
      }
      return a;
    }
    case ModuleSpec::Kind::OneDim: {
      if (!p.abelianization) throw ModuleActionUndefined("one-dimensional twist needs the abelianization");
      if (m.scalar.is_zero()) throw ModuleActionUndefined("twist parameter must be nonzero");
      return rep_action(one_dim(p, m.scalar));
    }
    case ModuleSpec::Kind::Hom: {
      if (!m.alpha || !m.beta) throw ModuleActionUndefined("hom module needs two representations");
      if (!(m.alpha->presentation() == p) || !(m.beta->presentation() == p))
        throw ModuleActionUndefined("hom module representations use another presentation");
      // vec(A X B^-1) = (A kron B^-T) vec(X), row-major
      ModuleAction a;
      a.dim = m.alpha->rank() * m.beta->rank();
      for (int g = 0; g < p.generator_count(); ++g) {
        a.act.push_back(kronecker(m.alpha->image(g), m.beta->inverse_image(g).transpose()));
        a.act_inv.push_back(kronecker(m.alpha->inverse_image(g), m.beta->image(g).transpose()));
      }
      return a;
    }
    case ModuleSpec::Kind::Metabelian: {
      if (!p.abelianization) throw ModuleActionUndefined("metabelian module needs the abelianization");
      return metabelian_action(p, m.scalar, m.n);
    }
  }
  throw ModuleActionUndefined("unknown module");
}

bool CocycleSpace::contains(const Vector& z) const {
  if (z.size() != module_dim * generator_count) return false;
  for (const auto& x : relator_jacobian * z)
    if (!x.is_zero()) return false;
  return true;
}

CocycleSpace cocycle_space(const Presentation& p, const ModuleAction& m) {
  CocycleSpace s;
  s.module_dim = m.dim;
  s.generator_count = p.generator_count();
  s.relator_jacobian = fox_jacobian(p, m);
  s.basis = kernel_basis(s.relator_jacobian);
  return s;
}

CocycleSpace cocycle_space(const Representation& r, const ModuleSpec& m) {
  return cocycle_space(r.presentation(), module_action(r, m));
}

CohomologyReport cohomology_dims(const Presentation& p, const ModuleAction& m) {
  CohomologyReport rep;
  std::size_t d = m.dim, gens = p.generator_count(), rels = p.relators.size();
  Matrix jac = fox_jacobian(p, m);
  std::size_t rk = rank(jac);
  rep.z1 = gens * d - rk;
  if (gens == 0) {
    rep.h0 = d;
  } else {
    std::vector<Matrix> eqs;
    for (std::size_t g = 0; g < gens; ++g) eqs.push_back(m.act[g] - Matrix::identity(d));
    rep.h0 = d - rank(vstack(eqs));
  }
  rep.b1 = d - rep.h0;
  rep.h1 = rep.z1 - rep.b1;
  rep.h2_complex = rels * d - rk;
  return rep;
}

CohomologyReport cohomology_dims(const Representation& r, const ModuleSpec& m) {
  CohomologyReport rep = cohomology_dims(r.presentation(), module_action(r, m));
  rep.module = m.str();
  return rep;
}

RegularityVerdict check_infinitesimal_regularity(const Representation& r, std::size_t k) {
  RegularityVerdict v;
  std::size_t n = r.rank();
  CohomologyReport c = cohomology_dims(r);
  v.h0 = c.h0;
  v.z1 = c.z1;
  v.h1 = c.h1;
  v.expected_h1 = k * (n - 1);
  v.infinitesimally_regular = c.h1 == v.expected_h1;
  if (v.infinitesimally_regular) {
    v.regular = true;
    v.predicted_component_dim = static_cast<long>(n * n - 1 + k * (n - 1)) - static_cast<long>(c.h0);
    v.certificate = "infinitesimally regular";
    return v;
  }
  // A central representation lies on the abelian component phi^* R_n(Z),
  // which has dimension n^2 - 1.
  bool central = r.presentation().abelianization.has_value();
  for (const auto& m : r.images()) central = central && m.is_scalar();
  if (central && n > 0) {
    v.certified_local_dim = n * n - 1;
    v.certificate = "central: abelian component of dimension n^2-1";
    if (*v.certified_local_dim == c.z1) {
      v.regular = true;
      v.predicted_component_dim = static_cast<long>(c.z1);
    }
  }
  return v;
}

std::vector<Matrix> coboundary_of(const Representation& r, const Matrix& x) {
  if (!x.trace().is_zero()) throw NonzeroTrace("coboundary needs a trace-zero matrix");
  std::vector<Matrix> out;
  for (int g = 0; g < r.presentation().generator_count(); ++g)
    out.push_back(x - r.image(g) * x * r.inverse_image(g));
  return out;
}

Vector sl_cochain(const std::vector<Matrix>& values) {
  Vector v;
  for (const auto& m : values) {
    Vector c = sl_coords(m);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

std::vector<Matrix> sl_cochain_matrices(const Vector& v, std::size_t gens, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& part : split_cochain(v, gens, n * n - 1)) out.push_back(sl_matrix(part, n));
  return out;
}

SeriesMatrix series_mul(const SeriesMatrix& a, const SeriesMatrix& b, std::size_t degree) {
  std::size_t n = a[0].rows();
  SeriesMatrix out(degree + 1, Matrix(n, n));
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace {

// exp(U) for U with zero constant term, truncated after t^degree.
SeriesMatrix series_exp(const SeriesMatrix& u, std::size_t degree) {
  std::size_t n = u[0].rows();
  SeriesMatrix result(degree + 1, Matrix(n, n));
  SeriesMatrix term(degree + 1, Matrix(n, n));
  result[0] = term[0] = Matrix::identity(n);
  for (std::size_t m = 1; m <= degree; ++m) {
    term = series_mul(term, u, degree);
    Cyc inv_m(Rational(1, static_cast<long>(m)));
    for (auto& c : term) c = inv_m * c;
    for (std::size_t i = 0; i <= degree; ++i) result[i] += term[i];
  }
  return result;
}

}  // namespace

std::vector<SeriesMatrix> deformed_relators(const TruncatedDeformation& d, std::size_t degree) {
  const Representation& r = d.base;
  const Presentation& p = r.presentation();
  std::size_t n = r.rank();
  std::vector<SeriesMatrix> fwd, bwd;
  for (int g = 0; g < p.generator_count(); ++g) {
    SeriesMatrix u(degree + 1, Matrix(n, n)), neg(degree + 1, Matrix(n, n));
    for (std::size_t i = 0; i < d.cochains.size() && i + 1 <= degree; ++i) {
      const Matrix& ui = d.cochains[i][g];
      if (!ui.trace().is_zero()) throw InvalidTruncation("cochain values must be trace-zero");
      u[i + 1] = ui;
      neg[i + 1] = -ui;
    }
    SeriesMatrix e = series_exp(u, degree), einv = series_exp(neg, degree);
    fwd.push_back(series_mul(e, SeriesMatrix{r.image(g)}, degree));
    bwd.push_back(series_mul(SeriesMatrix{r.inverse_image(g)}, einv, degree));
  }
  std::vector<SeriesMatrix> out;
  for (const auto& rel : p.relators) {
    SeriesMatrix acc(degree + 1, Matrix(n, n));
    acc[0] = Matrix::identity(n);
    for (const auto& x : rel.letters()) acc = series_mul(acc, x.exp > 0 ? fwd[x.gen] : bwd[x.gen], degree);
    out.push_back(std::move(acc));
  }
  return out;
}

ObstructionResult obstruction_step(const TruncatedDeformation& d) {
  const Representation& r = d.base;
  const Presentation& p = r.presentation();
  std::size_t n = r.rank(), k = d.order();
  for (const auto& u : d.cochains)
    if (static_cast<int>(u.size()) != p.generator_count())
      throw InvalidTruncation("each cochain needs one value per generator");
  auto rels = deformed_relators(d, k + 1);
  ObstructionResult res;
  res.order = k + 1;
  for (std::size_t j = 0; j < rels.size(); ++j) {
    for (std::size_t i = 1; i <= k; ++i)
      if (!rels[j][i].is_zero())
        throw InvalidTruncation("relator " + std::to_string(j + 1) + " fails at order " + std::to_string(i));
    Vector c = sl_coords(rels[j][k + 1]);
    res.defect.insert(res.defect.end(), c.begin(), c.end());
  }
  Matrix jac = fox_jacobian(p, ad_action(r));
  Vector rhs = res.defect;
  for (auto& x : rhs) x = -x;
  if (auto sol = solve(jac, rhs)) {
    res.extends = true;
    res.extension = sl_cochain_matrices(*sol, p.generator_count(), n);
  }
  return res;
}

TangentGapReport tangent_gap_report(const Representation& r, std::optional<std::size_t> known_local_dim) {
  TangentGapReport t;
  t.z1 = cohomology_dims(r).z1;
  t.local_dim = known_local_dim;
  if (known_local_dim) {
    t.gap = static_cast<long>(t.z1) - static_cast<long>(*known_local_dim);
    t.strict = t.gap > 0;
  }
  return t;
}

}  // namespace repvar
