#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "repvar/numbers.hpp"

namespace repvar {

// Laurent polynomial sum_i coeffs[i] t^(low + i) over Q(zeta_N).
// Stored trimmed: first and last coefficients are nonzero; zero has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Cyc& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long v) : LaurentPoly(Cyc(v)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(long low, std::vector<Cyc> coeffs);

  static LaurentPoly monomial(long exponent, const Cyc& c = Cyc(1));
  static LaurentPoly t() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  // High minus low exponent; -1 for zero.
  long span() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Cyc>& coeffs() const { return c_; }
  Cyc coeff(long exponent) const;
  Cyc leading() const { return c_.back(); }
  bool is_unit() const { return c_.size() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  // Exact division; throws DivisionByZero or UnrepresentableInput if b does not divide a.
  friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(long e) const;
  Cyc eval(const Cyc& x) const;
  LaurentPoly derivative() const;
  // p(t^-1)
  LaurentPoly invert_variable() const;
  LaurentPoly scaled(const Cyc& c) const;
  LaurentPoly shifted(long k) const;

  // Associate-class representative: lowest exponent 0, monic.
  LaurentPoly normalized() const;

  std::string str() const;

 private:
  void trim();

  long low_ = 0;
  std::vector<Cyc> c_;
};

// Treat a and b as polynomials after shifting both to lowest exponent 0;
// quotient and remainder of that division, as genuine polynomials.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);

// True when b divides a in K[t, t^-1].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// a = b up to a unit c t^k.
bool associated(const LaurentPoly& a, const LaurentPoly& b);

// Normalized gcd; zero when every input is zero.
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps);
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact evaluation; EvalAtZero when x = 0.
Cyc laurent_eval(const LaurentPoly& p, const Cyc& x);

// Parser for the field grammar extended by the variable t.
LaurentPoly parse_laurent(std::string_view text, long order);

}  // namespace repvar
