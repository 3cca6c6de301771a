#include "modp/mat2.hpp"

#include <ostream>
#include <sstream>

#include "modp/errors.hpp"

namespace modp {

Mat2::Mat2(i64 a, i64 b, i64 c, i64 d, i64 p, int N) : p_(p), q_(ipow(p, N)), N_(N) {
  if (N < 1) throw LevelError("Mat2 level must be positive");
  e_ = {normmod(a, q_), normmod(b, q_), normmod(c, q_), normmod(d, q_)};
}

i64 Mat2::det() const { return normmod(mulmod(e_[0], e_[3], q_) - mulmod(e_[1], e_[2], q_), q_); }

Mat2 Mat2::inverse() const {
  i64 di = invmod(det(), q_);
  return Mat2(mulmod(e_[3], di, q_), mulmod(-e_[1], di, q_), mulmod(-e_[2], di, q_),
              mulmod(e_[0], di, q_), p_, N_);
}

Mat2 Mat2::operator*(const Mat2& o) const {
  if (o.p_ != p_ || o.N_ != N_) throw LevelError("Mat2 product across levels");
  auto mm = [this](i64 x, i64 y, i64 z, i64 w) {
    return normmod(mulmod(x, y, q_) + mulmod(z, w, q_), q_);
  };
  Mat2 r;
  r.p_ = p_; r.q_ = q_; r.N_ = N_;
  r.e_ = {mm(e_[0], o.e_[0], e_[1], o.e_[2]), mm(e_[0], o.e_[1], e_[1], o.e_[3]),
          mm(e_[2], o.e_[0], e_[3], o.e_[2]), mm(e_[2], o.e_[1], e_[3], o.e_[3])};
  return r;
}

Mat2 Mat2::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  Mat2 r = identity(p_, N_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Mat2 Mat2::reduce(int M) const {
  if (M > N_) throw LevelError("reduce to a higher level");
  return Mat2(e_[0], e_[1], e_[2], e_[3], p_, M);
}

Mat2 Mat2::lift(int M) const {
  if (M < N_) return reduce(M);
  return Mat2(e_[0], e_[1], e_[2], e_[3], p_, M);
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[" << e_[0] << " " << e_[1] << "; " << e_[2] << " " << e_[3] << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2& g) { return os << g.str(); }

Mat2 conj_by_pi(const Mat2& g) {
  if (g.level() < 2) throw LevelError("conjugation by Pi needs level >= 2");
  if (g.c() % g.prime()) throw DomainError("conjugation by Pi leaves M_2(Z_p)");
  const i64 p = g.prime();
  return Mat2(g.d(), g.c() / p, g.b() * p, g.a(), p, g.level() - 1);
}

ScaledMat ScaledMat::from(const Mat2& g) { return make(g.a(), g.b(), g.c(), g.d(), g.prime()); }

ScaledMat ScaledMat::make(i64 a, i64 b, i64 c, i64 d, i64 p, int shift) {
  ScaledMat s;
  s.m = {a, b, c, d};
  s.p = p;
  s.shift = shift;
  if (s.det() == 0) throw DomainError("singular group element");
  return s;
}

ScaledMat ScaledMat::operator*(const ScaledMat& o) const {
  auto mm = [](i64 x, i64 y, i64 z, i64 w) {
    __int128 r = static_cast<__int128>(x) * y + static_cast<__int128>(z) * w;
    if (r > (__int128(1) << 62) || r < -(__int128(1) << 62)) throw LevelError("group element overflow");
    return static_cast<i64>(r);
  };
  ScaledMat r;
  r.p = p;
  r.shift = shift + o.shift;
  r.m = {mm(m[0], o.m[0], m[1], o.m[2]), mm(m[0], o.m[1], m[1], o.m[3]),
         mm(m[2], o.m[0], m[3], o.m[2]), mm(m[2], o.m[1], m[3], o.m[3])};
  return r;
}

std::string ScaledMat::str() const {
  std::ostringstream os;
  if (shift) os << "p^" << shift << "*";
  os << "[" << m[0] << " " << m[1] << "; " << m[2] << " " << m[3] << "]";
  return os.str();
}

ScaledMat Pi(i64 p) { return ScaledMat::make(0, 1, p, 0, p); }
ScaledMat t_elem(i64 p) { return ScaledMat::make(p, 0, 0, 1, p); }
ScaledMat s_elem(i64 p) { return ScaledMat::make(0, 1, 1, 0, p); }

}  // namespace modp
