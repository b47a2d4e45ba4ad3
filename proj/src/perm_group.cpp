#include "moufang/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace moufang {

PermGroup::PermGroup(Idx degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      fail(ErrorCode::DegreeMismatch, "generator degree mismatch");
    insert_generator(g);
  }
  order_ = 1;
  for (const Level& lvl : levels_) order_ *= static_cast<unsigned>(lvl.orbit.size());
}

void PermGroup::insert_generator(const Perm& g) {
  if (g.is_identity()) return;
  Perm residue = sift_from(g, 0);
  if (residue.is_identity()) return;
  retained_.push_back(g);
  insert_strong(std::move(residue));
  process_pending();
}

void PermGroup::insert_strong(Perm h) {
  std::size_t j = 0;
  while (j < levels_.size() && h.apply(levels_[j].beta) == levels_[j].beta) ++j;
  if (j == levels_.size()) {
    Level lvl;
    lvl.beta = h.smallest_moved_point();
    lvl.pos.assign(static_cast<std::size_t>(degree_), -1);
    lvl.pos[static_cast<std::size_t>(lvl.beta)] = 0;
    lvl.orbit.push_back(lvl.beta);
    lvl.tree_prev.push_back(-1);
    lvl.tree_gen.push_back(-1);
    lvl.expanded.push_back(0);
    levels_.push_back(std::move(lvl));
  }
  for (std::size_t k = 0; k <= j; ++k) add_gen_to_level(k, h);
}

void PermGroup::add_gen_to_level(std::size_t k, const Perm& h) {
  Level& lvl = levels_[k];
  const std::size_t gi = lvl.gens.size();
  lvl.gens.push_back(h);
  lvl.gen_invs.push_back(h.inverse());
  for (std::size_t oi = 0; oi < lvl.orbit.size(); ++oi)
    lvl.pending.emplace_back(oi, gi);
  extend_orbit(k);
}

void PermGroup::extend_orbit(std::size_t k) {
  Level& lvl = levels_[k];
  for (std::size_t oi = 0; oi < lvl.orbit.size(); ++oi) {
    const Idx p = lvl.orbit[oi];
    for (std::size_t gi = lvl.expanded[oi]; gi < lvl.gens.size(); ++gi) {
      const Idx q = lvl.gens[gi].apply(p);
      if (lvl.pos[static_cast<std::size_t>(q)] < 0) {
        lvl.pos[static_cast<std::size_t>(q)] =
            static_cast<Idx>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.tree_prev.push_back(p);
        lvl.tree_gen.push_back(static_cast<Idx>(gi));
        lvl.expanded.push_back(0);
        const std::size_t new_oi = lvl.orbit.size() - 1;
        for (std::size_t gi2 = 0; gi2 < lvl.gens.size(); ++gi2)
          lvl.pending.emplace_back(new_oi, gi2);
      }
    }
    lvl.expanded[oi] = lvl.gens.size();
  }
}

void PermGroup::apply_inverse_transversal(std::size_t k, Idx point,
                                          std::vector<Idx>& h_images) const {
  const Level& lvl = levels_[k];
  while (point != lvl.beta) {
    const Idx oi = lvl.pos[static_cast<std::size_t>(point)];
    const Perm& inv = lvl.gen_invs[static_cast<std::size_t>(lvl.tree_gen[oi])];
    for (Idx& v : h_images) v = inv.apply(v);
    point = lvl.tree_prev[static_cast<std::size_t>(oi)];
  }
}

Perm PermGroup::transversal(std::size_t k, Idx point) const {
  const Level& lvl = levels_[k];
  std::vector<Idx> path;
  Idx p = point;
  while (p != lvl.beta) {
    const Idx oi = lvl.pos[static_cast<std::size_t>(p)];
    path.push_back(lvl.tree_gen[static_cast<std::size_t>(oi)]);
    p = lvl.tree_prev[static_cast<std::size_t>(oi)];
  }
  std::vector<Idx> images(static_cast<std::size_t>(degree_));
  std::iota(images.begin(), images.end(), 0);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Perm& g = lvl.gens[static_cast<std::size_t>(*it)];
    for (Idx& v : images) v = g.apply(v);
  }
  return Perm(std::move(images));
}

void PermGroup::process_pending() {
  while (true) {
    std::size_t k = levels_.size();
    for (std::size_t i = levels_.size(); i-- > 0;) {
      if (!levels_[i].pending.empty()) {
        k = i;
        break;
      }
    }
    if (k == levels_.size()) break;

    Level& lvl = levels_[k];
    auto [oi, gi] = lvl.pending.front();
    lvl.pending.pop_front();
    const Idx p = lvl.orbit[oi];
    const Perm& g = lvl.gens[gi];
    const Idx q = g.apply(p);
    std::vector<Idx> s = transversal(k, p).images();
    for (Idx& v : s) v = g.apply(v);
    apply_inverse_transversal(k, q, s);
    Perm schreier(std::move(s));
    if (schreier.apply(lvl.beta) != lvl.beta)
      fail(ErrorCode::InternalError, "Schreier element moves the base point");
    if (!schreier.is_identity()) {
      Perm residue = sift_from(schreier, k + 1);
      if (!residue.is_identity()) insert_strong(std::move(residue));
    }
  }
}

Perm PermGroup::sift_from(const Perm& p, std::size_t start) const {
  std::vector<Idx> images = p.images();
  for (std::size_t k = start; k < levels_.size(); ++k) {
    const Level& lvl = levels_[k];
    const Idx gamma = images[static_cast<std::size_t>(lvl.beta)];
    if (lvl.pos[static_cast<std::size_t>(gamma)] < 0) break;
    apply_inverse_transversal(k, gamma, images);
  }
  return Perm(std::move(images));
}

Perm PermGroup::sift(const Perm& p) const {
  if (p.degree() != degree_) fail(ErrorCode::DegreeMismatch, "sift");
  return sift_from(p, 0);
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) fail(ErrorCode::DegreeMismatch, "contains");
  return sift_from(p, 0).is_identity();
}

std::vector<Idx> PermGroup::base() const {
  std::vector<Idx> out;
  out.reserve(levels_.size());
  for (const Level& lvl : levels_) out.push_back(lvl.beta);
  return out;
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(levels_.size());
  for (const Level& lvl : levels_) out.push_back(lvl.orbit.size());
  return out;
}

bool PermGroup::is_transitive() const {
  if (degree_ <= 1) return true;
  return !levels_.empty() &&
         levels_[0].orbit.size() == static_cast<std::size_t>(degree_);
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

std::vector<Perm> PermGroup::random_elements(std::size_t count,
                                             std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Perm> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Perm p = Perm::identity(degree_);
    if (!retained_.empty()) {
      const std::size_t len = 1 + rng() % 20;
      for (std::size_t j = 0; j < len; ++j)
        p = p.then(retained_[rng() % retained_.size()]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::pair<Perm, Perm> translations(const FiniteLoop& loop, Idx x) {
  const Idx n = loop.order();
  std::vector<Idx> left(loop.row(x), loop.row(x) + n);
  std::vector<Idx> right(static_cast<std::size_t>(n));
  for (Idx y = 0; y < n; ++y) right[static_cast<std::size_t>(y)] = loop.mul(y, x);
  return {Perm(std::move(left)), Perm(std::move(right))};
}

std::vector<Perm> inner_generators(const FiniteLoop& loop) {
  const Idx n = loop.order();
  if (n > 300)
    fail(ErrorCode::CarrierTooLarge,
         "inner generator materialization is guarded at order 300 (got " +
             std::to_string(n) + "); use inner_mapping_group instead");
  std::vector<Perm> out;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> dedup;
  auto add = [&](std::vector<Idx> images) {
    Perm p(std::move(images));
    if (p.is_identity()) return;
    auto& bucket = dedup[p.fingerprint()];
    for (std::size_t i : bucket)
      if (out[i] == p) return;
    bucket.push_back(out.size());
    out.push_back(std::move(p));
  };
  std::vector<Idx> images(static_cast<std::size_t>(n));
  for (Idx x = 0; x < n; ++x) {
    for (Idx u = 0; u < n; ++u)
      images[static_cast<std::size_t>(u)] = loop.mul(loop.ldiv(x, u), x);
    add(images);
  }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      const Idx yx = loop.mul(y, x);
      for (Idx u = 0; u < n; ++u)
        images[static_cast<std::size_t>(u)] =
            loop.ldiv(yx, loop.mul(y, loop.mul(x, u)));
      add(images);
    }
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      const Idx xy = loop.mul(x, y);
      for (Idx u = 0; u < n; ++u)
        images[static_cast<std::size_t>(u)] =
            loop.rdiv(loop.mul(loop.mul(u, x), y), xy);
      add(images);
    }
  return out;
}

PermGroup multiplication_group(const FiniteLoop& loop) {
  const Idx n = loop.order();
  std::vector<Perm> gens;
  gens.reserve(2 * static_cast<std::size_t>(n));
  for (Idx x = 1; x < n; ++x) {
    auto [lx, rx] = translations(loop, x);
    gens.push_back(std::move(lx));
    gens.push_back(std::move(rx));
  }
  return PermGroup(n, gens);
}

PermGroup inner_mapping_group(const FiniteLoop& loop) {
  PermGroup mlt = multiplication_group(loop);
  return PermGroup(loop.order(), mlt.stabilizer_generators(1));
}

}  // namespace moufang
