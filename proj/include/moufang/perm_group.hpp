#pragma once

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "moufang/perm.hpp"

namespace moufang {

// Permutation group with a deterministic stabilizer chain (base points picked
// greedily as the smallest moved point). Construction is single-threaded; the
// finished object is immutable and supports order and membership queries.
class PermGroup {
 public:
  PermGroup(Idx degree, const std::vector<Perm>& generators);

  Idx degree() const noexcept { return degree_; }
  // Non-redundant generators actually retained while building the chain.
  const std::vector<Perm>& generators() const noexcept { return retained_; }
  const BigInt& order() const noexcept { return order_; }
  bool contains(const Perm& p) const;
  bool is_trivial() const noexcept { return levels_.empty(); }

  std::vector<Idx> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  bool is_transitive() const;

  // Residue of sifting p through the chain; identity iff p is a member.
  Perm sift(const Perm& p) const;
  // Strong generators fixing the first `level` base points; for level >= 1
  // these generate the pointwise stabilizer of that base prefix.
  std::vector<Perm> stabilizer_generators(std::size_t level) const;
  // Deterministic pseudo-random products of the generators.
  std::vector<Perm> random_elements(std::size_t count, std::uint64_t seed) const;

 private:
  struct Level {
    Idx beta = 0;
    std::vector<Perm> gens;
    std::vector<Perm> gen_invs;
    std::vector<Idx> orbit;            // BFS order; orbit[0] == beta
    std::vector<Idx> pos;              // point -> orbit index or -1
    std::vector<Idx> tree_prev;        // per orbit index: previous point
    std::vector<Idx> tree_gen;         // per orbit index: generator index
    std::vector<std::size_t> expanded; // per orbit index: gens already applied
    std::deque<std::pair<std::size_t, std::size_t>> pending;  // (orbit i, gen i)
  };

  void insert_generator(const Perm& g);
  void insert_strong(Perm h);
  void add_gen_to_level(std::size_t k, const Perm& h);
  void extend_orbit(std::size_t k);
  void process_pending();
  // Multiplies h (in place) by the inverse transversal element carrying
  // `point` back to the base of level k.
  void apply_inverse_transversal(std::size_t k, Idx point,
                                 std::vector<Idx>& h_images) const;
  Perm transversal(std::size_t k, Idx point) const;
  Perm sift_from(const Perm& p, std::size_t start) const;

  Idx degree_;
  std::vector<Perm> retained_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// Left and right translation permutations (y L_x = xy, y R_x = yx).
std::pair<Perm, Perm> translations(const FiniteLoop& loop, Idx x);

// T_x, L_{x,y}, R_{x,y} for all x, y, deduplicated, identity omitted. Each
// fixes 0 whenever the loop has two-sided inverses. Materialization is
// guarded: refuses loops of order > 300 (the count grows as 2n^2).
std::vector<Perm> inner_generators(const FiniteLoop& loop);

// Group generated by all translations.
PermGroup multiplication_group(const FiniteLoop& loop);

// Stabilizer of the identity inside the multiplication group, computed from
// the stabilizer chain; equals the group generated by inner_generators.
PermGroup inner_mapping_group(const FiniteLoop& loop);

}  // namespace moufang
