#include "repvar/laurent.hpp"

#include <sstream>

#include "expr_parser.hpp"

namespace repvar {

LaurentPoly::LaurentPoly(const Cyc& c) {
  if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly::LaurentPoly(long low, std::vector<Cyc> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(long exponent, const Cyc& c) {
  return LaurentPoly(exponent, std::vector<Cyc>{c});
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Cyc LaurentPoly::coeff(long e) const {
  if (c_.empty() || e < low_ || e > high()) return Cyc(0);
  return c_[e - low_];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<Cyc> out(hi - lo + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[low_ - lo + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[o.low_ - lo + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly();
  std::vector<Cyc> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  low_ += o.low_;
  c_ = std::move(out);
  trim();
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.c_.empty()) return true;
  if (a.low_ != b.low_) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Cyc> rem(a.coeffs());
  const auto& bc = b.coeffs();
  Cyc inv_lead = bc.back().inverse();
  std::vector<Cyc> quo(rem.size() >= bc.size() ? rem.size() - bc.size() + 1 : 0);
  while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  while (rem.size() >= bc.size()) {
    std::size_t shift = rem.size() - bc.size();
    Cyc f = rem.back() * inv_lead;
    quo[shift] = f;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[shift + i] -= f * bc[i];
    rem.pop_back();
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  q = LaurentPoly(0, std::move(quo));
  r = LaurentPoly(0, std::move(rem));
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  LaurentPoly q, r;
  poly_divmod(a, b, q, r);
  return r.is_zero();
}

LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (a.is_zero()) return a;
  LaurentPoly q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) throw UnrepresentableInput("inexact Laurent division");
  return q.shifted(a.low() - b.low());
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Cyc& c) const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (!is_unit()) throw UnrepresentableInput("negative power of a non-unit Laurent polynomial");
    return monomial(-low_, c_[0].inverse()).pow(-e);
  }
  LaurentPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Cyc LaurentPoly::eval(const Cyc& x) const { return laurent_eval(*this, x); }

Cyc laurent_eval(const LaurentPoly& p, const Cyc& x) {
  if (x.is_zero()) throw EvalAtZero("Laurent polynomial evaluated at 0");
  if (p.is_zero()) return Cyc(0);
  // Horner on the polynomial part, then the t^low factor
  const auto& c = p.coeffs();
  Cyc acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc * x.pow(p.low());
}

LaurentPoly LaurentPoly::derivative() const {
  std::vector<Cyc> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * Cyc(low_ + static_cast<long>(i));
  return LaurentPoly(low_ - 1, std::move(out));
}

LaurentPoly LaurentPoly::invert_variable() const {
  if (is_zero()) return *this;
  std::vector<Cyc> out(c_.rbegin(), c_.rend());
  return LaurentPoly(-high(), std::move(out));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly r = scaled(c_.back().inverse());
  r.low_ = 0;
  return r;
}

bool associated(const LaurentPoly& a, const LaurentPoly& b) {
  return a.normalized() == b.normalized();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.normalized(), y = b.normalized();
  while (!y.is_zero()) {
    LaurentPoly q, r;
    poly_divmod(x, y, q, r);
    x = std::move(y);
    y = r.normalized();
  }
  return x.normalized();
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps) {
  LaurentPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = laurent_gcd(g, p);
    if (g.is_unit()) break;
  }
  return g;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    long e = low_ + static_cast<long>(i);
    std::string cs = c_[i].str();
    bool simple = c_[i].is_rational();
    bool neg = simple && c_[i].rational_part() < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (simple) {
      Rational q = c_[i].rational_part();
      if (neg) q = -q;
      if (e == 0 || q != 1) os << q.get_str();
      if (e != 0 && q != 1) os << "*";
    } else {
      os << "(" << cs << ")";
      if (e != 0) os << "*";
    }
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct LaurentHooks {
  long order;
  LaurentPoly integer(const mpz_class& v) { return LaurentPoly(Cyc::rational(Rational(v), order)); }
  template <class P>
  LaurentPoly power(const LaurentPoly& b, long e, P& p) {
    try {
      return b.pow(e);
    } catch (const UnrepresentableInput&) {
      p.fail("negative exponent on a non-monomial");
    }
  }
  template <class P>
  LaurentPoly ident(const std::string& name, std::size_t at, P& p) {
    if (name == "t") return LaurentPoly::t();
    if (name == "zeta") {
      p.expect('(');
      long n = p.integer();
      p.expect(')');
      if (n < 1) throw SyntaxError("zeta order must be positive", at);
      if (order % n != 0)
        throw FieldMismatch("zeta(" + std::to_string(n) + ") is not in Q(zeta_" +
                            std::to_string(order) + ")");
      return LaurentPoly(Cyc::zeta(n, 1).embed(order));
    }
    if (name == "i") {
      if (order % 4 != 0) throw FieldMismatch("i needs an order divisible by 4");
      return LaurentPoly(Cyc::zeta(4, 1).embed(order));
    }
    if (name == "sqrt") {
      p.expect('(');
      LaurentPoly v = p.expr();
      p.expect(')');
      if (v.is_zero()) return v;
      if (!v.is_unit() || v.low() != 0) throw SyntaxError("sqrt of a non-constant", at);
      return LaurentPoly(sqrt_in_field(v.coeffs()[0], order));
    }
    throw SyntaxError("unknown identifier '" + name + "'", at);
  }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, long order) {
  LaurentHooks hooks{order};
  detail::ExprParser<LaurentPoly, LaurentHooks> p(text, hooks);
  return p.parse_all();
}

}  // namespace repvar
