#pragma once
#include <array>
#include <iosfwd>
#include <string>

#include "modp/field.hpp"

namespace modp {

// 2x2 matrix over Z/p^N, entries stored as canonical representatives.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(i64 a, i64 b, i64 c, i64 d, i64 p, int N);
  static Mat2 identity(i64 p, int N) { return Mat2(1, 0, 0, 1, p, N); }

  i64 a() const { return e_[0]; }
  i64 b() const { return e_[1]; }
  i64 c() const { return e_[2]; }
  i64 d() const { return e_[3]; }
  i64 operator()(int i, int j) const { return e_[2 * i + j]; }
  i64 prime() const { return p_; }
  int level() const { return N_; }
  i64 modulus() const { return q_; }

  i64 det() const;
  bool invertible() const { return det() % p_ != 0; }
  Mat2 inverse() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 pow(i64 e) const;
  Mat2 reduce(int M) const;
  // same representatives read at a higher level
  Mat2 lift(int M) const;
  bool operator==(const Mat2& o) const = default;
  std::string str() const;

 private:
  std::array<i64, 4> e_{1, 0, 0, 1};
  i64 p_ = 2, q_ = 2;
  int N_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Mat2& g);

// Pi g Pi^{-1} = [d, c/p; p b, a]; needs c in pZ, drops the level by one.
// Pi^2 is central, so this is also conjugation by Pi^{-1}.
Mat2 conj_by_pi(const Mat2& g);

// Element p^shift * m of GL2(Q_p) with m an integral matrix (exact integers).
struct ScaledMat {
  std::array<i64, 4> m{1, 0, 0, 1};
  int shift = 0;
  i64 p = 2;

  static ScaledMat from(const Mat2& g);
  static ScaledMat make(i64 a, i64 b, i64 c, i64 d, i64 p, int shift = 0);
  ScaledMat operator*(const ScaledMat& o) const;
  i64 det() const { return m[0] * m[3] - m[1] * m[2]; }
  std::string str() const;
};

ScaledMat Pi(i64 p);     // [0 1; p 0]
ScaledMat t_elem(i64 p);  // [p 0; 0 1]
ScaledMat s_elem(i64 p);  // [0 1; 1 0]

}  // namespace modp
