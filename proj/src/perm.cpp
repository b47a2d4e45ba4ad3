#include "moufang/perm.hpp"

#include <algorithm>
#include <numeric>

namespace moufang {

Perm::Perm(std::vector<Idx> images) : images_(std::move(images)) {
  const Idx d = degree();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(d), 0);
  for (Idx v : images_) {
    if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::InvalidParameter, "image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(Idx degree) {
  std::vector<Idx> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::then(const Perm& g) const {
  if (g.degree() != degree()) fail(ErrorCode::DegreeMismatch, "compose");
  std::vector<Idx> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = g.images_[static_cast<std::size_t>(images_[i])];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<Idx> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[static_cast<std::size_t>(images_[i])] = static_cast<Idx>(i);
  return Perm(std::move(out));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Idx>(i)) return false;
  return true;
}

Idx Perm::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Idx>(i)) return static_cast<Idx>(i);
  return -1;
}

BigInt Perm::order() const {
  const Idx d = degree();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(d), 0);
  BigInt result = 1;
  for (Idx i = 0; i < d; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    Idx len = 0;
    Idx j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      j = images_[static_cast<std::size_t>(j)];
      ++len;
    }
    result = boost::multiprecision::lcm(result, BigInt(len));
  }
  return result;
}

std::uint64_t Perm::fingerprint() const {
  return fnv1a64(images_.data(), images_.size() * sizeof(Idx));
}

}  // namespace moufang
