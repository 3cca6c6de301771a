#include "modp/field.hpp"

#include <ostream>

#include "modp/errors.hpp"

namespace modp {

i64 mulmod(i64 a, i64 b, i64 m) {
  __int128 r = static_cast<__int128>(a) * b % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

i64 normmod(i64 a, i64 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

i64 powmod(i64 a, i64 e, i64 m) {
  if (e < 0) return powmod(invmod(a, m), -e, m);
  i64 r = 1 % m;
  a = normmod(a, m);
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 m) {
  i64 g = m, x = 0, y = 1, b = normmod(a, m);
  // invariant: g = x*a' mod m, b = y*a' mod m
  while (b) {
    i64 q = g / b;
    i64 t = g - q * b; g = b; b = t;
    t = x - q * y; x = y; y = t;
  }
  if (g != 1) throw DomainError("not a unit modulo " + std::to_string(m));
  return normmod(x, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  i64 phi = p - 1;
  std::vector<i64> fs;
  i64 m = phi;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fs.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 f : fs)
      if (powmod(g, phi / f, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  return 1;  // p == 2
}

i64 primitive_root_pp(i64 p) {
  i64 g = primitive_root(p);
  if (powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

i64 ipow(i64 p, int n) {
  if (n < 0) throw LevelError("negative exponent");
  i64 r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > (i64(1) << 62) / p) throw LevelError("p^N exceeds the 62-bit bound");
    r *= p;
  }
  return r;
}

int valuation(i64 a, i64 p, int cap) {
  if (a == 0) return cap;
  int v = 0;
  while (a % p == 0 && v < cap) { a /= p; ++v; }
  return v;
}

PrimeField::PrimeField(i64 p_) : p(p_) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  gen_ = primitive_root(p);
  if (p <= (1 << 20)) {
    log_.assign(p, -1);
    i64 x = 1;
    for (int k = 0; k < p - 1; ++k) { log_[x] = k; x = x * gen_ % p; }
  }
}

i64 PrimeField::inv(i64 a) const {
  a = red(a);
  if (a == 0) throw DomainError("zero has no inverse");
  return powmod(a, p - 2, p);
}

int PrimeField::dlog(i64 a) const {
  a = red(a);
  if (a == 0) throw DomainError("log of zero");
  if (!log_.empty()) return log_[a];
  i64 x = 1;
  for (int k = 0; k < p - 1; ++k, x = x * gen_ % p)
    if (x == a) return k;
  throw InternalError("dlog");
}

ResidueInt::ResidueInt(i64 a, i64 p, int N) : p_(p), m_(ipow(p, N)), N_(N) {
  if (N < 1) throw LevelError("level must be positive");
  v_ = normmod(a, m_);
}

void ResidueInt::check(const ResidueInt& o) const {
  if (o.p_ != p_ || o.N_ != N_) throw LevelError("mixed rings in residue arithmetic");
}

int ResidueInt::valuation() const { return modp::valuation(v_, p_, N_); }

ResidueInt ResidueInt::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit");
  ResidueInt r = *this;
  r.v_ = invmod(v_, m_);
  return r;
}

ResidueInt ResidueInt::pow(i64 e) const {
  ResidueInt r = *this;
  r.v_ = powmod(v_, e, m_);
  return r;
}

ResidueInt ResidueInt::reduce(int M) const {
  if (M > N_) throw LevelError("cannot raise level by reduction");
  return ResidueInt(v_, p_, M);
}

ResidueInt ResidueInt::operator+(const ResidueInt& o) const {
  check(o);
  ResidueInt r = *this;
  r.v_ = normmod(v_ + o.v_, m_);
  return r;
}

ResidueInt ResidueInt::operator-(const ResidueInt& o) const {
  check(o);
  ResidueInt r = *this;
  r.v_ = normmod(v_ - o.v_, m_);
  return r;
}

ResidueInt ResidueInt::operator*(const ResidueInt& o) const {
  check(o);
  ResidueInt r = *this;
  r.v_ = mulmod(v_, o.v_, m_);
  return r;
}

ResidueInt ResidueInt::operator-() const {
  ResidueInt r = *this;
  r.v_ = normmod(-v_, m_);
  return r;
}

std::ostream& operator<<(std::ostream& os, const ResidueInt& a) {
  return os << a.value() << " mod " << a.prime() << "^" << a.level();
}

ResidueInt teichmuller(i64 a, i64 p, int N) {
  ResidueInt x(a, p, N);
  if (!x.is_unit()) return ResidueInt(0, p, N);
  // a -> a^p converges to the unique (p-1)-th root of unity lifting a
  for (int i = 0; i < N; ++i) x = x.pow(p);
  return x;
}

i64 least_nonresidue(i64 p) {
  for (i64 e = 2; e < p; ++e)
    if (powmod(e, (p - 1) / 2, p) == p - 1) return e;
  throw DomainError("no non-residue");
}

FieldElem::FieldElem(i64 a, i64 p, int degree) : FieldElem(a, 0, p, degree) {}

FieldElem::FieldElem(i64 a0, i64 a1, i64 p, int degree) : p_(p), d_(degree) {
  if (degree != 1 && degree != 2) throw DomainError("only F_p and F_p^2 are supported");
  if (degree == 1 && normmod(a1, p) != 0) throw DomainError("F_p element with a t-component");
  eps_ = degree == 2 ? least_nonresidue(p) : 1;
  a0_ = normmod(a0, p);
  a1_ = normmod(a1, p);
}

FieldElem FieldElem::gen(i64 p) { return FieldElem(0, 1, p, 2); }

void FieldElem::check(const FieldElem& o) const {
  if (o.p_ != p_ || o.d_ != d_) throw DomainError("mixed fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check(o);
  return FieldElem(a0_ + o.a0_, a1_ + o.a1_, p_, d_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check(o);
  return FieldElem(a0_ - o.a0_, a1_ - o.a1_, p_, d_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check(o);
  i64 c0 = normmod(mulmod(a0_, o.a0_, p_) + mulmod(eps_, mulmod(a1_, o.a1_, p_), p_), p_);
  i64 c1 = normmod(mulmod(a0_, o.a1_, p_) + mulmod(a1_, o.a0_, p_), p_);
  return FieldElem(c0, c1, p_, d_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("zero has no inverse");
  // (a0 + a1 t)^{-1} = (a0 - a1 t) / (a0^2 - eps a1^2)
  i64 n = normmod(mulmod(a0_, a0_, p_) - mulmod(eps_, mulmod(a1_, a1_, p_), p_), p_);
  i64 ni = invmod(n, p_);
  return FieldElem(mulmod(a0_, ni, p_), mulmod(normmod(-a1_, p_), ni, p_), p_, d_);
}

FieldElem FieldElem::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r(1, p_, d_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

ResidueInt teichmuller(const FieldElem& a, int N) {
  if (!a.in_prime_field()) throw DomainError("Teichmuller lift needs an F_p element");
  return teichmuller(a.c0(), a.prime(), N);
}

}  // namespace modp
