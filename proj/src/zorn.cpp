#include "moufang/zorn.hpp"

namespace moufang {

namespace {

using Vec3 = std::array<int, 3>;

int dot(const GaloisField& F, const Vec3& x, const Vec3& y) {
  int s = 0;
  for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(x[i], y[i]));
  return s;
}

Vec3 cross(const GaloisField& F, const Vec3& x, const Vec3& y) {
  return {F.sub(F.mul(x[1], y[2]), F.mul(x[2], y[1])),
          F.sub(F.mul(x[2], y[0]), F.mul(x[0], y[2])),
          F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]))};
}

Vec3 combine(const GaloisField& F, int s, const Vec3& x, int t, const Vec3& y) {
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = F.add(F.mul(s, x[i]), F.mul(t, y[i]));
  return out;
}

Vec3 vec_sub(const GaloisField& F, const Vec3& x, const Vec3& y) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = F.sub(x[i], y[i]);
  return out;
}

Vec3 vec_add(const GaloisField& F, const Vec3& x, const Vec3& y) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = F.add(x[i], y[i]);
  return out;
}

}  // namespace

ZornMatrix zorn_identity() { return {1, {0, 0, 0}, {0, 0, 0}, 1}; }

ZornMatrix zorn_multiply(const GaloisField& F, const ZornMatrix& x,
                         const ZornMatrix& y) {
  ZornMatrix out;
  out.a = F.add(F.mul(x.a, y.a), dot(F, x.v, y.w));
  out.v = vec_sub(F, combine(F, x.a, y.v, y.b, x.v), cross(F, x.w, y.w));
  out.w = vec_add(F, combine(F, y.a, x.w, x.b, y.w), cross(F, x.v, y.v));
  out.b = F.add(F.mul(x.b, y.b), dot(F, x.w, y.v));
  return out;
}

ZornMatrix zorn_negate(const GaloisField& F, const ZornMatrix& x) {
  return zorn_scale(F, F.neg(1), x);
}

ZornMatrix zorn_scale(const GaloisField& F, int lambda, const ZornMatrix& x) {
  ZornMatrix out;
  out.a = F.mul(lambda, x.a);
  out.b = F.mul(lambda, x.b);
  for (int i = 0; i < 3; ++i) {
    out.v[i] = F.mul(lambda, x.v[i]);
    out.w[i] = F.mul(lambda, x.w[i]);
  }
  return out;
}

int zorn_det(const GaloisField& F, const ZornMatrix& x) {
  return F.sub(F.mul(x.a, x.b), dot(F, x.v, x.w));
}

std::string zorn_label(const ZornMatrix& x) {
  auto digit = [](int v) { return static_cast<char>('0' + v); };
  std::string s;
  s += digit(x.a);
  s += '|';
  for (int i = 0; i < 3; ++i) s += digit(x.v[i]);
  s += '|';
  for (int i = 0; i < 3; ++i) s += digit(x.w[i]);
  s += '|';
  s += digit(x.b);
  return s;
}

}  // namespace moufang
