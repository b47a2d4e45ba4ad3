#pragma once

#include <vector>

#include "moufang/errors.hpp"

namespace moufang {

// Exact arithmetic in GF(q), q = p^k <= 9 with k in {1,2}. Elements are
// encoded as 0..q-1 by base-p coefficient digits (value = sum c_i p^i).
// Moduli: GF(4) = F2[x]/(x^2+x+1), GF(9) = F3[x]/(x^2+1). Field axioms are
// verified exhaustively at construction.
class GaloisField {
 public:
  static const GaloisField& get(int q);

  int q() const noexcept { return q_; }
  int p() const noexcept { return p_; }
  int degree() const noexcept { return k_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  // a must be nonzero.
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }

 private:
  explicit GaloisField(int q);
  void verify_axioms() const;

  int q_, p_, k_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

}  // namespace moufang
