#include "repvar/linalg.hpp"

#include <sstream>

namespace repvar {

Matrix::Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Cyc> entries)
    : r_(rows), c_(cols), e_(std::move(entries)) {
  if (e_.size() != r_ * c_) throw DimensionMismatch("entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyc(1);
  return m;
}

Matrix Matrix::diag(const std::vector<Cyc>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyc>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sum shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix difference shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product shapes differ");
  Matrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Cyc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator*(const Cyc& s, Matrix a) {
  for (auto& x : a.e_) x *= s;
  return a;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.c_ != v.size()) throw DimensionMismatch("matrix-vector shapes differ");
  Vector out(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Cyc Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Cyc s;
  for (std::size_t i = 0; i < r_; ++i) s += (*this)(i, i);
  return s;
}

Cyc Matrix::det() const {
  if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = r_;
  if (n == 0) return Cyc(1);
  Matrix m = *this;
  Cyc prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Cyc(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Cyc(0);
    }
    prev = m(k, k);
  }
  Cyc d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = r_;
  Matrix aug = hstack({*this, identity(n)});
  std::vector<std::size_t> piv;
  Matrix red = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DivisionByZero("singular matrix");
  return red.block(0, n, n, n);
}

Matrix Matrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Matrix result = identity(r_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw DimensionMismatch("block out of range");
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Vector Matrix::row(std::size_t i) const { return Vector(e_.begin() + i * c_, e_.begin() + (i + 1) * c_); }

Vector Matrix::col(std::size_t j) const {
  Vector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_scalar() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (i == j ? (*this)(i, j) != (*this)(0, 0) : !(*this)(i, j).is_zero()) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  std::size_t r = 0;
  Cyc prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) {
        // row unchanged up to the common factor pivot / prev
        if (m(r, c) != prev)
          for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) m(i, j) = m(r, c) * m(i, j) / prev;
        continue;
      }
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = Cyc(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
  Matrix m = a;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Cyc inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Cyc f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix red = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Cyc(1);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -red(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  Matrix aug = hstack({m, Matrix::column(rhs)});
  std::vector<std::size_t> piv;
  Matrix red = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = red(k, m.cols());
  return x;
}

std::size_t span_dim(const std::vector<Vector>& vs) {
  if (vs.empty()) return 0;
  Matrix m(vs.size(), vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
  return rank(m);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix vstack(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix();
  std::size_t rows = 0, cols = ms[0].cols();
  for (const auto& m : ms) {
    if (m.cols() != cols) throw DimensionMismatch("vstack column counts differ");
    rows += m.rows();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& m : ms) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

Matrix hstack(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix();
  std::size_t rows = ms[0].rows(), cols = 0;
  for (const auto& m : ms) {
    if (m.rows() != rows) throw DimensionMismatch("hstack row counts differ");
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t c = 0;
  for (const auto& m : ms) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

// ---------------------------------------------------------------------------

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

LaurentMatrix::LaurentMatrix(const Matrix& m) : LaurentMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = LaurentPoly(m(i, j));
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("Laurent matrix sum shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("Laurent matrix product shapes differ");
  LaurentMatrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

LaurentMatrix LaurentMatrix::select(const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& cols) const {
  LaurentMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& s) const {
  LaurentMatrix m = *this;
  for (auto& x : m.e_) x *= s;
  return m;
}

Matrix LaurentMatrix::eval(const Cyc& t0) const {
  Matrix m(r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = laurent_eval((*this)(i, j), t0);
  return m;
}

LaurentPoly LaurentMatrix::det() const {
  if (r_ != c_) throw DimensionMismatch("determinant of a non-square Laurent matrix");
  std::size_t n = r_;
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = *this;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // prefer the pivot with fewest terms to keep intermediate sizes down
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (p == n || m(i, k).span() < m(p, k).span())) p = i;
    if (p == n) return LaurentPoly();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LaurentPoly minors_gcd(const LaurentMatrix& m, std::size_t size) {
  if (size == 0) return LaurentPoly(1);
  if (size > m.rows() || size > m.cols()) throw DimensionMismatch("minor size exceeds matrix shape");
  std::vector<std::size_t> rows(size), cols(size);
  for (std::size_t i = 0; i < size; ++i) rows[i] = i;
  LaurentPoly g;
  do {
    for (std::size_t i = 0; i < size; ++i) cols[i] = i;
    do {
      LaurentPoly d = m.select(rows, cols).det();
      if (d.is_zero()) continue;
      g = laurent_gcd(g, d);
      if (g.is_unit()) return g;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

LaurentPoly maximal_minors_gcd(const LaurentMatrix& in) {
  LaurentMatrix m = in.rows() <= in.cols() ? in : in.transpose();
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0) return LaurentPoly(1);
  auto col_axpy = [&](std::size_t dst, std::size_t src, const LaurentPoly& f, std::size_t from) {
    for (std::size_t r = from; r < rows; ++r)
      if (!m(r, src).is_zero()) m(r, dst) -= f * m(r, src);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, a), m(r, b));
  };
  // Column operations over K[t, t^-1] bring m to [L | 0] with L lower triangular.
  LaurentPoly prod(1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t k = i; k < cols; ++k)
        if (!m(i, k).is_zero() && (best == cols || m(i, k).span() < m(i, best).span())) best = k;
      if (best == cols) return LaurentPoly();
      if (best != i) col_swap(i, best);
      bool done = true;
      for (std::size_t k = i + 1; k < cols; ++k) {
        if (m(i, k).is_zero()) continue;
        LaurentPoly q, rem;
        poly_divmod(m(i, k), m(i, i), q, rem);
        col_axpy(k, i, q.shifted(m(i, k).low() - m(i, i).low()), i);
        if (!m(i, k).is_zero()) done = false;
      }
      if (done) break;
    }
    prod *= m(i, i);
  }
  return prod.normalized();
}

}  // namespace repvar
