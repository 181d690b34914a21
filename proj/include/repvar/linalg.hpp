#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repvar/laurent.hpp"
#include "repvar/numbers.hpp"

namespace repvar {

using Vector = std::vector<Cyc>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyc> entries);

  static Matrix identity(std::size_t n);
  static Matrix diag(const std::vector<Cyc>& d);
  static Matrix from_rows(const std::vector<std::vector<Cyc>>& rows);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  Cyc& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const Cyc& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const std::vector<Cyc>& entries() const { return e_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator-() const;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyc& s, Matrix a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const;
  Cyc trace() const;
  Cyc det() const;
  Matrix inverse() const;  // DivisionByZero when singular
  Matrix pow(long e) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar() const;

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Cyc> e_;
};

// Rank by fraction-free elimination.
std::size_t rank(const Matrix& m);

// Reduced row echelon form; pivot columns returned in order.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Basis of {v : m v = 0}, one vector per free column of the RREF, with a 1 in
// that free position.
std::vector<Vector> kernel_basis(const Matrix& m);

// One solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

// Dimension of the span of the given vectors.
std::size_t span_dim(const std::vector<Vector>& vs);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

// Stack matrices vertically / horizontally.
Matrix vstack(const std::vector<Matrix>& ms);
Matrix hstack(const std::vector<Matrix>& ms);

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols);
  explicit LaurentMatrix(const Matrix& m);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

  LaurentMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  LaurentMatrix scaled(const LaurentPoly& s) const;
  LaurentMatrix transpose() const;
  // Entry-wise substitution t = t0.
  Matrix eval(const Cyc& t0) const;
  LaurentPoly det() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<LaurentPoly> e_;
};

// Normalized gcd of all size x size minors; 1 for size 0, 0 if all vanish.
LaurentPoly minors_gcd(const LaurentMatrix& m, std::size_t size);

// Same as minors_gcd(m, min(rows, cols)), computed by unimodular Euclidean
// reduction instead of enumerating minors.
LaurentPoly maximal_minors_gcd(const LaurentMatrix& m);

}  // namespace repvar
