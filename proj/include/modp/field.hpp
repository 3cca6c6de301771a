#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace modp {

using i64 = std::int64_t;

i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, i64 e, i64 m);
i64 normmod(i64 a, i64 m);
// inverse of a unit modulo m, DomainError otherwise
i64 invmod(i64 a, i64 m);
bool is_prime(i64 n);
// smallest generator of (Z/p)^x
i64 primitive_root(i64 p);
// smallest g mod p^2 generating (Z/p^2)^x, hence every (Z/p^N)^x
i64 primitive_root_pp(i64 p);
// p^n, LevelError if it does not fit in 62 bits
i64 ipow(i64 p, int n);
// p-adic valuation of a nonzero integer; returns cap for 0
int valuation(i64 a, i64 p, int cap = 64);

struct PrimeField {
  i64 p;
  explicit PrimeField(i64 p_);
  i64 red(i64 a) const { a %= p; return a < 0 ? a + p : a; }
  i64 add(i64 a, i64 b) const { return red(a + b); }
  i64 sub(i64 a, i64 b) const { return red(a - b); }
  i64 mul(i64 a, i64 b) const { return mulmod(a, b, p); }
  i64 neg(i64 a) const { return red(-a); }
  i64 inv(i64 a) const;
  i64 pow(i64 a, i64 e) const { return powmod(red(a), e, p); }
  // discrete log base the smallest primitive root
  int dlog(i64 a) const;
  i64 generator() const { return gen_; }

 private:
  i64 gen_;
  std::vector<int> log_;
};

// Element of Z/p^N with p^N < 2^62.
class ResidueInt {
 public:
  ResidueInt() = default;
  ResidueInt(i64 a, i64 p, int N);
  i64 value() const { return v_; }
  i64 prime() const { return p_; }
  int level() const { return N_; }
  i64 modulus() const { return m_; }
  bool is_unit() const { return v_ % p_ != 0; }
  int valuation() const;
  ResidueInt inverse() const;
  ResidueInt pow(i64 e) const;
  ResidueInt reduce(int M) const;
  ResidueInt operator+(const ResidueInt& o) const;
  ResidueInt operator-(const ResidueInt& o) const;
  ResidueInt operator*(const ResidueInt& o) const;
  ResidueInt operator-() const;
  bool operator==(const ResidueInt& o) const = default;

 private:
  void check(const ResidueInt& o) const;
  i64 v_ = 0, p_ = 2, m_ = 1;
  int N_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ResidueInt& a);

// Teichmuller lift of a in F_p to Z/p^N.
ResidueInt teichmuller(i64 a, i64 p, int N);

// F_p, or F_{p^2} = F_p[t]/(t^2 - eps) with eps the least non-residue.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(i64 a, i64 p, int degree = 1);
  FieldElem(i64 a0, i64 a1, i64 p, int degree);
  static FieldElem gen(i64 p);  // t in F_{p^2}
  int degree() const { return d_; }
  i64 prime() const { return p_; }
  i64 c0() const { return a0_; }
  i64 c1() const { return a1_; }
  bool is_zero() const { return a0_ == 0 && a1_ == 0; }
  bool in_prime_field() const { return a1_ == 0; }
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem pow(i64 e) const;
  bool operator==(const FieldElem& o) const = default;

 private:
  void check(const FieldElem& o) const;
  i64 a0_ = 0, a1_ = 0, p_ = 2, eps_ = 1;
  int d_ = 1;
};

i64 least_nonresidue(i64 p);
// Teichmuller lift of an F_p element; DomainError outside the prime field
ResidueInt teichmuller(const FieldElem& a, int N);

}  // namespace modp
