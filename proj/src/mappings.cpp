#include "moufang/mappings.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "moufang/errors.hpp"

namespace moufang {

namespace {

std::uint64_t pair_fingerprint(const PseudoautPair& p) {
  std::uint64_t h = p.map.fingerprint();
  h ^= 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(p.companion) +
       (h << 6) + (h >> 2);
  return h;
}

bool pair_equal(const PseudoautPair& x, const PseudoautPair& y) {
  return x.companion == y.companion && x.map == y.map;
}

}  // namespace

bool is_pseudoautomorphism(const FiniteLoop& loop, const Perm& map,
                           Idx companion) {
  Idx n = loop.order();
  if (map.degree() != n) {
    fail(ErrorCode::DegreeMismatch, "map degree does not match loop order");
  }
  for (Idx x = 0; x < n; ++x) {
    Idx ax = map.apply(x);
    const Idx* row_x = loop.row(x);
    for (Idx y = 0; y < n; ++y) {
      Idx lhs = loop.mul(ax, loop.mul(map.apply(y), companion));
      Idx rhs = loop.mul(map.apply(row_x[y]), companion);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

PseudoautPair psaut_identity(const FiniteLoop& loop) {
  return PseudoautPair{Perm::identity(loop.order()), 0};
}

PseudoautPair psaut_compose(const PseudoautPair& p1, const PseudoautPair& p2,
                            const FiniteLoop& loop) {
  if (p1.map.degree() != loop.order() || p2.map.degree() != loop.order()) {
    fail(ErrorCode::DegreeMismatch, "pair degree does not match loop order");
  }
  PseudoautPair out{p1.map.then(p2.map),
                    loop.mul(p2.map.apply(p1.companion), p2.companion)};
#ifndef NDEBUG
  if (loop.order() <= 64 &&
      is_pseudoautomorphism(loop, p1.map, p1.companion) &&
      is_pseudoautomorphism(loop, p2.map, p2.companion) &&
      !is_pseudoautomorphism(loop, out.map, out.companion)) {
    fail(ErrorCode::InternalError, "composition left PsAut");
  }
#endif
  return out;
}

PseudoautPair psaut_inverse(const PseudoautPair& p, const FiniteLoop& loop) {
  if (p.map.degree() != loop.order()) {
    fail(ErrorCode::DegreeMismatch, "pair degree does not match loop order");
  }
  Perm inv = p.map.inverse();
  // Solve (a B) * b = e for b, where B is the inverse map.
  Idx b = loop.ldiv(inv.apply(p.companion), 0);
  return PseudoautPair{std::move(inv), b};
}

PseudoautPair inner_psaut(const FiniteLoop& loop, Idx x) {
  Idx n = loop.order();
  if (x < 0 || x >= n) fail(ErrorCode::InvalidParameter, "element out of range");
  std::vector<Idx> images(static_cast<std::size_t>(n));
  for (Idx u = 0; u < n; ++u) {
    images[static_cast<std::size_t>(u)] = loop.mul(loop.ldiv(x, u), x);
  }
  return PseudoautPair{Perm(std::move(images)), loop.power(x, -3)};
}

PsInnResult psinn_group(const FiniteLoop& loop) {
  Idx n = loop.order();
  // The budget caps stored pairs; shrink it so pathological closures on
  // large carriers cannot exhaust memory before tripping the guard.
  std::size_t budget = default_budget();
  std::size_t mem_cap = 50'000'000 / std::max<std::size_t>(1, n);
  budget = std::min(budget, std::max<std::size_t>(mem_cap, 1024));

  PsInnResult result;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  auto try_insert = [&](PseudoautPair p) -> bool {
    std::uint64_t h = pair_fingerprint(p);
    auto& bucket = buckets[h];
    for (std::size_t i : bucket) {
      if (pair_equal(result.elements[i], p)) return false;
    }
    if (result.elements.size() >= budget) {
      fail(ErrorCode::ClosureBudgetExceeded,
           "pseudoautomorphism closure exceeded " + std::to_string(budget) +
               " pairs");
    }
    bucket.push_back(result.elements.size());
    result.elements.push_back(std::move(p));
    return true;
  };

  std::vector<PseudoautPair> gens;
  for (Idx x = 0; x < n; ++x) {
    PseudoautPair g = inner_psaut(loop, x);
    bool dup = false;
    for (const auto& have : gens) {
      if (pair_equal(have, g)) {
        dup = true;
        break;
      }
    }
    if (!dup) gens.push_back(std::move(g));
  }
  result.generator_count = gens.size();

  try_insert(psaut_identity(loop));
  std::deque<std::size_t> work;
  work.push_back(0);
  while (!work.empty()) {
    std::size_t cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      PseudoautPair next = psaut_compose(result.elements[cur], g, loop);
      std::size_t before = result.elements.size();
      if (try_insert(std::move(next))) work.push_back(before);
    }
  }
  return result;
}

}  // namespace moufang
