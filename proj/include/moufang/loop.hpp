#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moufang/errors.hpp"

namespace moufang {

using Idx = std::int32_t;

// Largest order for which a full multiplication table is materialized.
inline constexpr std::size_t kMaxTableOrder = 4096;

namespace detail {
struct LoopCache;
}

// A finite loop stored as a flat Cayley table over indices 0..n-1 with the
// identity fixed at index 0. Left and right division tables are precomputed;
// building them doubles as the Latin-square validation. Immutable after
// construction and safe for concurrent reads.
class FiniteLoop {
 public:
  static FiniteLoop from_cayley_table(const std::vector<std::vector<Idx>>& rows,
                                      std::string name = {},
                                      std::vector<std::string> labels = {});
  static FiniteLoop from_flat_table(std::vector<Idx> flat, Idx order,
                                    std::string name = {},
                                    std::vector<std::string> labels = {});

  Idx order() const noexcept { return n_; }

  Idx mul(Idx x, Idx y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  // The unique y with mul(x, y) == c.
  Idx ldiv(Idx x, Idx c) const {
    return ldiv_[static_cast<std::size_t>(x) * n_ + c];
  }
  // The unique x with mul(x, y) == c.
  Idx rdiv(Idx c, Idx y) const {
    return rdiv_[static_cast<std::size_t>(y) * n_ + c];
  }
  // Right inverse: the unique y with mul(x, y) == 0. Coincides with the left
  // inverse exactly when inverses are two-sided (always, for Moufang loops).
  Idx inverse(Idx x) const { return ldiv(x, 0); }
  bool has_two_sided_inverses() const;

  // Left powers x^(k+1) = x * x^k; k may be negative (uses the right inverse).
  Idx power(Idx x, std::int64_t k) const;
  // Least k >= 1 with x^k == 0 under left powers.
  Idx element_order(Idx x) const;

  const std::string& name() const noexcept { return name_; }
  FiniteLoop with_name(std::string name) const;
  // Either empty or of size order().
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Idx x) const;

  const std::vector<Idx>& flat_table() const noexcept { return table_; }
  std::uint64_t table_fingerprint() const noexcept { return fingerprint_; }

  // Pointer to row x of the Cayley table (n consecutive entries).
  const Idx* row(Idx x) const {
    return table_.data() + static_cast<std::size_t>(x) * n_;
  }
  const Idx* ldiv_row(Idx x) const {
    return ldiv_.data() + static_cast<std::size_t>(x) * n_;
  }

  detail::LoopCache& cache() const;

 private:
  FiniteLoop(std::vector<Idx> flat, Idx order, std::string name,
             std::vector<std::string> labels);

  Idx n_ = 1;
  std::vector<Idx> table_;
  std::vector<Idx> ldiv_;
  std::vector<Idx> rdiv_;
  std::string name_;
  std::vector<std::string> labels_;
  std::uint64_t fingerprint_ = 0;
  std::shared_ptr<detail::LoopCache> cache_;
};

// A subloop is a sorted element subset of a parent loop containing the
// identity and closed under product (closure under division and inverses
// follows from finiteness). The parent must outlive the subloop.
class Subloop {
 public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  Subloop(const FiniteLoop& parent, std::vector<Idx> elements);
  Subloop(unchecked_t, const FiniteLoop& parent, std::vector<Idx> sorted_elements);

  const FiniteLoop& parent() const noexcept { return *parent_; }
  const std::vector<Idx>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool contains(Idx x) const { return member_[static_cast<std::size_t>(x)] != 0; }
  bool is_trivial() const noexcept { return elems_.size() == 1; }
  bool is_whole() const noexcept {
    return elems_.size() == static_cast<std::size_t>(parent_->order());
  }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const Subloop& a, const Subloop& b) {
    return a.elems_ == b.elems_;
  }

 private:
  const FiniteLoop* parent_;
  std::vector<Idx> elems_;
  std::vector<std::uint8_t> member_;
  std::uint64_t fingerprint_ = 0;
};

struct TripleReport {
  bool ok = true;
  // First violating triple in lexicographic order when ok is false.
  std::array<Idx, 3> witness{0, 0, 0};
};

// Exhaustive check of xy . zx == (x . yz) x over all triples.
TripleReport check_moufang(const FiniteLoop& loop);
inline bool is_moufang(const FiniteLoop& loop) { return check_moufang(loop).ok; }

// Exhaustive check of (xy)z == x(yz) over all triples.
TripleReport check_associative(const FiniteLoop& loop);
inline bool is_associative(const FiniteLoop& loop) {
  return check_associative(loop).ok;
}

bool is_commutative(const FiniteLoop& loop);

// The unique c with xy == (yx) c.
Idx commutator(const FiniteLoop& loop, Idx x, Idx y);

// Elements associating with all pairs in every position.
Subloop nucleus(const FiniteLoop& loop);

// Least closed subset containing gens and the identity.
Subloop generated_subloop(const FiniteLoop& loop, std::span<const Idx> gens);
// As above but abandons the closure once it would exceed max_size.
std::optional<Subloop> generated_subloop_capped(const FiniteLoop& loop,
                                                std::span<const Idx> gens,
                                                std::size_t max_size);

Subloop trivial_subloop(const FiniteLoop& loop);
Subloop whole_subloop(const FiniteLoop& loop);
Subloop subloop_intersection(const Subloop& a, const Subloop& b);
Subloop subloop_join(const Subloop& a, const Subloop& b);

// Least normal subloop containing gens. Normal subloops are exactly the
// blocks through the identity of the loop's multiplication group, so this
// runs a minimal-block computation driven by the table rows and columns.
Subloop normal_closure(const FiniteLoop& loop, std::span<const Idx> gens);
bool is_normal(const FiniteLoop& loop, const Subloop& sub);

// Distinct normal closures of single elements, deduplicated; closure_of[x]
// indexes closures for x != 0 and is -1 for x == 0. Cached on the loop.
struct ClosureAtlas {
  std::vector<std::vector<Idx>> closures;
  std::vector<std::int32_t> closure_of;
};
const ClosureAtlas& single_closure_atlas(const FiniteLoop& loop);

// Inclusion-minimal elements among the nontrivial single-element normal
// closures; for |L| > 1 these are exactly the minimal normal subloops.
std::vector<Subloop> minimal_normal_subloops(const FiniteLoop& loop);

struct QuotientResult {
  FiniteLoop loop;
  // projection[x] = index of the coset of x; a surjective homomorphism.
  std::vector<Idx> projection;
};
// Quotient by a normal subloop; cosets are sorted by least representative.
QuotientResult quotient(const FiniteLoop& loop, const Subloop& sub);

// Standalone loop on the elements of a subloop (labels inherited).
FiniteLoop extract_subloop(const FiniteLoop& loop, const Subloop& sub);

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b);

// Backtracking isomorphism search, intended for orders <= 60. Returns the
// element mapping a -> b if one exists.
std::optional<std::vector<Idx>> find_isomorphism(const FiniteLoop& a,
                                                 const FiniteLoop& b);
inline bool is_isomorphic(const FiniteLoop& a, const FiniteLoop& b) {
  return find_isomorphism(a, b).has_value();
}

std::uint64_t fnv1a64(const void* data, std::size_t bytes,
                      std::uint64_t seed = 1469598103934665603ull);

}  // namespace moufang
