#pragma once

#include <array>
#include <string>

#include "moufang/gf.hpp"

namespace moufang {

// Zorn vector matrix (a  v / w  b) with scalar diagonal and 3-vector
// off-diagonal entries over GF(q); realizes the split octonion algebra.
struct ZornMatrix {
  int a = 0;
  std::array<int, 3> v{0, 0, 0};
  std::array<int, 3> w{0, 0, 0};
  int b = 0;

  friend bool operator==(const ZornMatrix&, const ZornMatrix&) = default;
  // Lexicographic comparison on the tuple (a, v0, v1, v2, w0, w1, w2, b).
  friend auto operator<=>(const ZornMatrix& x, const ZornMatrix& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    if (auto c = x.v <=> y.v; c != 0) return c;
    if (auto c = x.w <=> y.w; c != 0) return c;
    return x.b <=> y.b;
  }
};

ZornMatrix zorn_identity();
ZornMatrix zorn_multiply(const GaloisField& F, const ZornMatrix& x,
                         const ZornMatrix& y);
ZornMatrix zorn_negate(const GaloisField& F, const ZornMatrix& x);
ZornMatrix zorn_scale(const GaloisField& F, int lambda, const ZornMatrix& x);
int zorn_det(const GaloisField& F, const ZornMatrix& x);
// Display form "a|v0v1v2|w0w1w2|b" with field elements as digits.
std::string zorn_label(const ZornMatrix& x);

}  // namespace moufang
