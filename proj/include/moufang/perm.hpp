#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moufang/errors.hpp"
#include "moufang/loop.hpp"

namespace moufang {

using BigInt = boost::multiprecision::cpp_int;

// A permutation of 0..degree-1 stored as its image array. Composition is
// postfix: x (f then g) = g(f(x)), matching the translation calculus
// convention y L_x = xy used throughout.
class Perm {
 public:
  explicit Perm(std::vector<Idx> images);
  static Perm identity(Idx degree);

  Idx degree() const noexcept { return static_cast<Idx>(images_.size()); }
  Idx apply(Idx p) const { return images_[static_cast<std::size_t>(p)]; }
  Idx operator()(Idx p) const { return apply(p); }
  const std::vector<Idx>& images() const noexcept { return images_; }

  Perm then(const Perm& g) const;
  Perm inverse() const;
  bool is_identity() const;
  // Smallest point moved, or -1 for the identity.
  Idx smallest_moved_point() const;
  BigInt order() const;
  std::uint64_t fingerprint() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<Idx> images_;
};

}  // namespace moufang
