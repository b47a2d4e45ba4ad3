#include "moufang/gf.hpp"

#include <map>
#include <mutex>

namespace moufang {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  if (is_prime(q)) {
    p_ = q;
    k_ = 1;
  } else if (q == 4) {
    p_ = 2;
    k_ = 2;
  } else if (q == 9) {
    p_ = 3;
    k_ = 2;
  } else {
    fail(ErrorCode::UnsupportedFieldSize, "q = " + std::to_string(q));
  }
  if (q_ > 9) fail(ErrorCode::UnsupportedFieldSize, "q = " + std::to_string(q));

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  // Reduction coefficients of x^2: GF(4) uses x^2 = x + 1, GF(9) x^2 = -1.
  const int red0 = (q_ == 4) ? 1 : (q_ == 9 ? p_ - 1 : 0);
  const int red1 = (q_ == 4) ? 1 : 0;

  auto digits = [this](int a) { return std::pair<int, int>{a % p_, a / p_}; };
  auto encode = [this](int c0, int c1) { return c0 + p_ * c1; };

  for (int a = 0; a < q_; ++a) {
    auto [a0, a1] = digits(a);
    neg_[a] = encode((p_ - a0) % p_, (p_ - a1) % p_);
    for (int b = 0; b < q_; ++b) {
      auto [b0, b1] = digits(b);
      add_[a * q_ + b] = encode((a0 + b0) % p_, (a1 + b1) % p_);
      // (a0 + a1 x)(b0 + b1 x) with x^2 reduced.
      int c0 = (a0 * b0) % p_;
      int c1 = (a0 * b1 + a1 * b0) % p_;
      int c2 = (a1 * b1) % p_;
      c0 = (c0 + c2 * red0) % p_;
      c1 = (c1 + c2 * red1) % p_;
      mul_[a * q_ + b] = encode(c0, c1);
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] == 0)
      fail(ErrorCode::InternalError, "no inverse in GF(" + std::to_string(q_) + ")");
  }
  verify_axioms();
}

void GaloisField::verify_axioms() const {
  auto check = [](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InternalError, std::string("field axiom: ") + what);
  };
  for (int a = 0; a < q_; ++a) {
    check(add(a, 0) == a, "additive identity");
    check(mul(a, 1) == a, "multiplicative identity");
    check(add(a, neg(a)) == 0, "additive inverse");
    if (a != 0) check(mul(a, inv(a)) == 1, "multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      check(add(a, b) == add(b, a), "commutative addition");
      check(mul(a, b) == mul(b, a), "commutative multiplication");
      for (int c = 0; c < q_; ++c) {
        check(add(add(a, b), c) == add(a, add(b, c)), "associative addition");
        check(mul(mul(a, b), c) == mul(a, mul(b, c)), "associative multiplication");
        check(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "distributivity");
      }
    }
  }
}

int GaloisField::inv(int a) const {
  if (a == 0) fail(ErrorCode::InvalidParameter, "inverse of zero");
  return inv_[a];
}

const GaloisField& GaloisField::get(int q) {
  static std::mutex mu;
  static std::map<int, GaloisField> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it == registry.end())
    it = registry.emplace(q, GaloisField(q)).first;
  return it->second;
}

}  // namespace moufang
