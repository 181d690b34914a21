#include "repvar/numbers.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "expr_parser.hpp"

namespace repvar {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    trim(r);
  }
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::vector<long> ipoly_div_exact(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r = a;
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    long f = r[k + b.size() - 1] / b.back();
    q[k] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= f * b[i];
  }
  return q;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = ipoly_div_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(long order) {
  if (order < 1) throw UnrepresentableInput("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<CyclotomicField>();
  f->order = order;
  f->degree = euler_phi(order);
  f->phi = cyclotomic_polynomial(order);
  const long d = f->degree;
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  f->powers.reserve(order);
  for (long k = 0; k < order; ++k) {
    f->powers.push_back(cur);
    // multiply by x and reduce by the monic Phi
    long top = cur[d - 1];
    for (long i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (long i = 0; i < d; ++i) cur[i] -= top * f->phi[i];
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(order, f);
  return it->second;
}

long common_order(long a, long b) {
  if (a % b == 0) return a;
  if (b % a == 0) return b;
  throw FieldMismatch("orders " + std::to_string(a) + " and " + std::to_string(b) +
                      " do not divide one another");
}

Cyc::Cyc() : field_(cyclotomic_field(1)), c_(1, Rational(0)) {}
Cyc::Cyc(long v) : field_(cyclotomic_field(1)), c_(1, Rational(v)) {}
Cyc::Cyc(const Rational& q) : field_(cyclotomic_field(1)), c_(1, q) {}

Cyc::Cyc(long order, std::vector<Rational> coeffs) : field_(cyclotomic_field(order)) {
  if (static_cast<long>(coeffs.size()) != field_->degree)
    throw DimensionMismatch("coefficient vector length must equal phi(order)");
  c_ = std::move(coeffs);
  for (auto& q : c_) q.canonicalize();
}

Cyc Cyc::zeta(long order, long exponent) {
  auto f = cyclotomic_field(order);
  long k = ((exponent % order) + order) % order;
  std::vector<Rational> c(f->degree);
  for (long i = 0; i < f->degree; ++i) c[i] = f->powers[k][i];
  return Cyc(order, std::move(c));
}

Cyc Cyc::rational(const Rational& q, long order) {
  std::vector<Rational> c(euler_phi(order), Rational(0));
  c[0] = q;
  return Cyc(order, std::move(c));
}

Cyc cyc_make(long order, long exponent) { return Cyc::zeta(order, exponent); }

bool Cyc::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

Cyc Cyc::embed(long target) const {
  const long n = order();
  if (target == n) return *this;
  if (target % n != 0) throw FieldMismatch("cannot embed order " + std::to_string(n) +
                                           " into order " + std::to_string(target));
  auto f = cyclotomic_field(target);
  const long ratio = target / n;
  std::vector<Rational> out(f->degree, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pw = f->powers[(static_cast<long>(k) * ratio) % target];
    for (long i = 0; i < f->degree; ++i)
      if (pw[i] != 0) out[i] += c_[k] * pw[i];
  }
  return Cyc(target, std::move(out));
}

// Brings both operands to one order. Rational values fit anywhere, so they
// never trigger FieldMismatch.
long Cyc::align(Cyc& a, const Cyc& b, Cyc& b_out) {
  long n;
  if (a.order() % b.order() == 0 || b.order() % a.order() == 0)
    n = std::max(a.order(), b.order());
  else if (b.is_rational())
    n = a.order();
  else if (a.is_rational())
    n = b.order();
  else
    n = common_order(a.order(), b.order());
  if (a.order() != n) a = a.is_rational() ? rational(a.c_[0], n) : a.embed(n);
  if (b.order() != n) {
    b_out = b.is_rational() ? rational(b.c_[0], n) : b.embed(n);
    return n;
  }
  return 0;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  Cyc tmp;
  if (align(*this, o, tmp)) return *this += tmp;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  Cyc tmp;
  if (align(*this, o, tmp)) return *this -= tmp;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  Cyc tmp;
  if (align(*this, o, tmp)) return *this *= tmp;
  const long n = order();
  const long d = field_->degree;
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (long i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < d; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + d);
  for (long k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& pw = field_->powers[k % n];
    for (long i = 0; i < d; ++i)
      if (pw[i] != 0) out[i] += prod[k] * pw[i];
  }
  c_ = std::move(out);
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_->degree == 1) return Cyc(Rational(1 / c_[0])).embed(order());
  QPoly a(c_.begin(), c_.end());
  trim(a);
  QPoly phi(field_->phi.begin(), field_->phi.end());
  // extended Euclid tracking the cofactor of a
  QPoly r0 = phi, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qpoly_divmod(r0, r1, q, r);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible
  Rational c = r0[0];
  QPoly q, rem;
  qpoly_divmod(s0, phi, q, rem);
  std::vector<Rational> out(field_->degree, Rational(0));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return Cyc(order(), std::move(out));
}

Cyc& Cyc::operator/=(const Cyc& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  return *this *= o.inverse();
}

Cyc Cyc::conj() const {
  const long n = order();
  std::vector<Rational> out(field_->degree, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pw = field_->powers[(n - static_cast<long>(k)) % n];
    for (long i = 0; i < field_->degree; ++i)
      if (pw[i] != 0) out[i] += c_[k] * pw[i];
  }
  return Cyc(n, std::move(out));
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc result = rational(1, order());
  Cyc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.order() == b.order()) return a.c_ == b.c_;
  Cyc x = a, tmp;
  if (Cyc::align(x, b, tmp)) return x.c_ == tmp.c_;
  return x.c_ == b.c_;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  const long n = order();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Rational q = c_[k];
    if (q == 0) continue;
    bool neg = q < 0;
    if (neg) q = -q;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << q.get_str();
      continue;
    }
    if (q != 1) os << q.get_str() << "*";
    os << "zeta(" << n << ")";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

bool as_scaled_root_of_unity(const Cyc& x, Rational& r, long& k) {
  if (x.is_zero()) return false;
  const long n = x.order();
  Cyc z = Cyc::zeta(n, -1);
  Cyc y = x;
  for (long j = 0; j < n; ++j) {
    if (y.is_rational()) {
      r = y.rational_part();
      k = j;
      return true;
    }
    y *= z;
  }
  return false;
}

namespace {

// Coordinates of y (order big) in the subfield Q(zeta_small), if it lies there.
bool restrict_to(const Cyc& y, long small, Cyc& out) {
  const long big = y.order();
  auto fs = cyclotomic_field(small);
  const long m = fs->degree;
  const long rows = y.field().degree;
  // columns: embedded basis vectors, then y
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1));
  for (long j = 0; j < m; ++j) {
    Cyc e = Cyc::zeta(small, j).embed(big);
    for (long i = 0; i < rows; ++i) a[i][j] = e.coeffs()[i];
  }
  for (long i = 0; i < rows; ++i) a[i][m] = y.coeffs()[i];
  std::vector<long> pivcol;
  long r = 0;
  for (long c = 0; c < m && r < rows; ++c) {
    long p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (long j = c; j <= m; ++j) a[r][j] *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (long j = c; j <= m; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (long i = r; i < rows; ++i)
    if (a[i][m] != 0) return false;
  std::vector<Rational> coords(m, Rational(0));
  for (long i = 0; i < r; ++i) coords[pivcol[i]] = a[i][m];
  out = Cyc(small, std::move(coords));
  return true;
}

// Squarefree factorization helper: returns odd primes of the squarefree part
// of |v| and whether 2 divides it; square part accumulated in sq.
bool squarefree_split(mpz_class v, std::vector<long>& odd_primes, bool& two, mpz_class& sq) {
  sq = 1;
  two = false;
  auto take = [&](const mpz_class& p) {
    int e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2 == 1) {
      if (p == 2)
        two = true;
      else if (p.fits_slong_p())
        odd_primes.push_back(p.get_si());
      else
        return false;
    }
    return true;
  };
  for (long p = 2; p < 100000; ++p) {
    if (v == 1) break;
    mpz_class pp(p);
    if (mpz_divisible_p(v.get_mpz_t(), pp.get_mpz_t()) && !take(pp)) return false;
  }
  if (v == 1) return true;
  if (mpz_perfect_square_p(v.get_mpz_t())) {
    sq *= sqrt(v);
    return true;
  }
  return false;
}

}  // namespace

Cyc sqrt_in_field(const Cyc& x, long order) {
  Cyc xe = x.embed(order);
  if (xe.is_zero()) return Cyc::rational(0, order);
  Rational r;
  long k = 0;
  if (!as_scaled_root_of_unity(xe, r, k))
    throw UnrepresentableInput("square root of " + x.str() +
                               ": only rational multiples of roots of unity are supported");
  // r = sign * num/den; sqrt(r) = sqrt(sign*num*den)/den
  mpz_class prod = r.get_num() * r.get_den();
  int sign = prod < 0 ? -1 : 1;
  if (sign < 0) prod = -prod;
  std::vector<long> odd;
  bool two = false;
  mpz_class sq;
  if (!squarefree_split(prod, odd, two, sq))
    throw UnrepresentableInput("cannot factor " + prod.get_str());
  long big = std::lcm(2 * order, 8L);
  for (long p : odd) big = std::lcm(big, p);
  // Gauss sums give sqrt(p*) with p* = (-1)^((p-1)/2) p
  Cyc root = Cyc::rational(Rational(sq, r.get_den()), big);
  int cur_sign = 1;
  for (long p : odd) {
    Cyc g = Cyc::rational(0, big);
    for (long a = 1; a < p; ++a) {
      long leg = 1;
      // Euler criterion
      mpz_class t;
      mpz_class base(a), mod(p);
      mpz_powm_ui(t.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
      if (t != 1) leg = -1;
      g += Cyc::rational(leg, big) * Cyc::zeta(p, a);
    }
    root *= g;
    if (p % 4 == 3) cur_sign = -cur_sign;
  }
  if (two) {
    // sqrt(2) = z8 + z8^-1, sqrt(-2) = z8 + z8^3
    if (cur_sign == sign)
      root *= Cyc::zeta(8, 1) + Cyc::zeta(8, 7);
    else
      root *= Cyc::zeta(8, 1) + Cyc::zeta(8, 3);
  } else if (cur_sign != sign) {
    root *= Cyc::zeta(4, 1);
  }
  // sqrt(zeta_order^k) = zeta_(2 order)^k
  root *= Cyc::zeta(2 * order, k);
  Cyc out;
  if (!restrict_to(root.embed(big), order, out))
    throw UnrepresentableInput("sqrt(" + x.str() + ") is not in Q(zeta_" +
                               std::to_string(order) + ")");
  return out;
}

namespace {

struct CycHooks {
  long order;
  Cyc integer(const mpz_class& v) { return Cyc::rational(Rational(v), order); }
  template <class P>
  Cyc power(const Cyc& b, long e, P&) {
    return b.pow(e);
  }
  template <class P>
  Cyc ident(const std::string& name, std::size_t at, P& p) {
    if (name == "zeta") {
      p.expect('(');
      long n = p.integer();
      p.expect(')');
      if (n < 1) throw SyntaxError("zeta order must be positive", at);
      if (order % n != 0)
        throw FieldMismatch("zeta(" + std::to_string(n) + ") is not in Q(zeta_" +
                            std::to_string(order) + ")");
      return Cyc::zeta(n, 1).embed(order);
    }
    if (name == "i") {
      if (order % 4 != 0) throw FieldMismatch("i needs an order divisible by 4");
      return Cyc::zeta(4, 1).embed(order);
    }
    if (name == "sqrt") {
      p.expect('(');
      Cyc v = p.expr();
      p.expect(')');
      return sqrt_in_field(v, order);
    }
    throw SyntaxError("unknown identifier '" + name + "'", at);
  }
};

}  // namespace

Cyc parse_cyc(std::string_view text, long order) {
  CycHooks hooks{order};
  detail::ExprParser<Cyc, CycHooks> p(text, hooks);
  return p.parse_all().embed(order);
}

}  // namespace repvar
