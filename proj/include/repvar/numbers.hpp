#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "repvar/errors.hpp"

namespace repvar {

using Rational = mpq_class;

// Euler phi, cyclotomic polynomial coefficients (constant term first).
long euler_phi(long n);
std::vector<long> cyclotomic_polynomial(long n);

// Per-order data shared by every element of Q(zeta_N): Phi_N and the power
// basis coordinates of zeta_N^k for 0 <= k < N.
struct CyclotomicField {
  long order = 1;
  long degree = 1;
  std::vector<long> phi;                       // monic, length degree + 1
  std::vector<std::vector<long>> powers;       // powers[k] has length degree
};

std::shared_ptr<const CyclotomicField> cyclotomic_field(long order);

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Elements of different orders combine when one order divides the other;
// the result lives in the larger field.
class Cyc {
 public:
  Cyc();
  Cyc(long v);  // NOLINT(google-explicit-constructor)
  Cyc(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyc(long order, std::vector<Rational> coeffs);

  static Cyc zeta(long order, long exponent = 1);
  static Cyc rational(const Rational& q, long order);

  long order() const { return field_->order; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const CyclotomicField& field() const { return *field_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }

  // Same element written over Q(zeta_order); order must be a multiple of ours.
  Cyc embed(long order) const;

  Cyc inverse() const;
  Cyc conj() const;
  Cyc pow(long e) const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Parseable text, e.g. "1/2 + 3*zeta(12)^2".
  std::string str() const;

 private:
  static long align(Cyc& a, const Cyc& b, Cyc& b_out);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;
};

// Order of the smallest field holding both operands; throws FieldMismatch.
long common_order(long a, long b);

// zeta_order^exponent, reduced.
Cyc cyc_make(long order, long exponent);

// r * zeta_order^k for some rational r and 0 <= k < order, if the element has
// that shape. Used for square roots and eigenvalue guesses.
bool as_scaled_root_of_unity(const Cyc& x, Rational& r, long& k);

// Square root inside Q(zeta_order) when x is a rational times a root of unity
// and the root exists there; otherwise UnrepresentableInput.
Cyc sqrt_in_field(const Cyc& x, long order);

// Parse the field-element grammar: integers, p/q, zeta(N)^k, i, sqrt(..),
// + - * / ( ) and integer powers. Everything is embedded into Q(zeta_order).
Cyc parse_cyc(std::string_view text, long order);

}  // namespace repvar
