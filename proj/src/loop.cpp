#include "moufang/loop.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <utility>

namespace moufang {

std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {
struct LoopCache {
  std::mutex mu;
  std::optional<ClosureAtlas> atlas;
};
}  // namespace detail

namespace {

std::uint64_t hash_indices(const std::vector<Idx>& v) {
  return fnv1a64(v.data(), v.size() * sizeof(Idx));
}

void validate_latin(const std::vector<Idx>& flat, Idx n) {
  std::vector<Idx> seen_row(n), seen_col(n);
  for (Idx x = 0; x < n; ++x) {
    std::fill(seen_row.begin(), seen_row.end(), -1);
    for (Idx y = 0; y < n; ++y) {
      Idx v = flat[static_cast<std::size_t>(x) * n + y];
      if (v < 0 || v >= n)
        fail(ErrorCode::NotLatinSquare,
             "entry out of range at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");
      if (seen_row[v] >= 0)
        fail(ErrorCode::NotLatinSquare,
             "row " + std::to_string(x) + " repeats entry " + std::to_string(v));
      seen_row[v] = y;
    }
  }
  for (Idx y = 0; y < n; ++y) {
    std::fill(seen_col.begin(), seen_col.end(), -1);
    for (Idx x = 0; x < n; ++x) {
      Idx v = flat[static_cast<std::size_t>(x) * n + y];
      if (seen_col[v] >= 0)
        fail(ErrorCode::NotLatinSquare,
             "column " + std::to_string(y) + " repeats entry " + std::to_string(v));
      seen_col[v] = x;
    }
  }
}

Idx find_identity(const std::vector<Idx>& flat, Idx n) {
  for (Idx e = 0; e < n; ++e) {
    bool ok = true;
    const Idx* row = flat.data() + static_cast<std::size_t>(e) * n;
    for (Idx y = 0; y < n; ++y) {
      if (row[y] != y) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (Idx x = 0; x < n && ok; ++x) {
      if (flat[static_cast<std::size_t>(x) * n + e] != x) ok = false;
    }
    if (ok) return e;
  }
  return -1;
}

}  // namespace

FiniteLoop::FiniteLoop(std::vector<Idx> flat, Idx order, std::string name,
                       std::vector<std::string> labels)
    : n_(order),
      table_(std::move(flat)),
      name_(std::move(name)),
      labels_(std::move(labels)) {
  const std::size_t n = static_cast<std::size_t>(n_);
  ldiv_.assign(n * n, -1);
  rdiv_.assign(n * n, -1);
  for (Idx x = 0; x < n_; ++x) {
    const Idx* row = table_.data() + n * x;
    Idx* ld = ldiv_.data() + n * x;
    for (Idx y = 0; y < n_; ++y) {
      Idx c = row[y];
      if (ld[c] >= 0)
        fail(ErrorCode::NotLatinSquare,
             "row " + std::to_string(x) + " repeats entry " + std::to_string(c));
      ld[c] = y;
      Idx* rd = rdiv_.data() + n * y;
      if (rd[c] >= 0)
        fail(ErrorCode::NotLatinSquare,
             "column " + std::to_string(y) + " repeats entry " + std::to_string(c));
      rd[c] = x;
    }
  }
  fingerprint_ = fnv1a64(table_.data(), table_.size() * sizeof(Idx),
                         fnv1a64(&n_, sizeof(n_)));
  cache_ = std::make_shared<detail::LoopCache>();
}

FiniteLoop FiniteLoop::from_flat_table(std::vector<Idx> flat, Idx order,
                                       std::string name,
                                       std::vector<std::string> labels) {
  if (order < 1) fail(ErrorCode::InvalidParameter, "order must be positive");
  if (static_cast<std::size_t>(order) > kMaxTableOrder)
    fail(ErrorCode::TableTooLarge,
         "order " + std::to_string(order) + " exceeds the full-table cap " +
             std::to_string(kMaxTableOrder));
  if (flat.size() != static_cast<std::size_t>(order) * order)
    fail(ErrorCode::InvalidParameter, "table size does not match order");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(order))
    fail(ErrorCode::InvalidParameter, "labels size does not match order");

  validate_latin(flat, order);
  Idx e = find_identity(flat, order);
  if (e < 0) fail(ErrorCode::NoIdentity, "no two-sided identity element");
  if (e != 0) {
    const std::size_t n = static_cast<std::size_t>(order);
    auto swap01 = [e](Idx v) -> Idx {
      if (v == 0) return e;
      if (v == e) return 0;
      return v;
    };
    std::vector<Idx> relabeled(n * n);
    for (Idx x = 0; x < order; ++x)
      for (Idx y = 0; y < order; ++y)
        relabeled[static_cast<std::size_t>(swap01(x)) * n + swap01(y)] =
            swap01(flat[static_cast<std::size_t>(x) * n + y]);
    flat = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[static_cast<std::size_t>(e)]);
  }
  return FiniteLoop(std::move(flat), order, std::move(name), std::move(labels));
}

FiniteLoop FiniteLoop::from_cayley_table(const std::vector<std::vector<Idx>>& rows,
                                         std::string name,
                                         std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorCode::InvalidParameter, "empty table");
  std::vector<Idx> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n)
      fail(ErrorCode::InvalidParameter, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(std::move(flat), static_cast<Idx>(n), std::move(name),
                         std::move(labels));
}

bool FiniteLoop::has_two_sided_inverses() const {
  for (Idx x = 0; x < n_; ++x)
    if (mul(ldiv(x, 0), x) != 0) return false;
  return true;
}

Idx FiniteLoop::element_order(Idx x) const {
  Idx y = x;
  Idx k = 1;
  while (y != 0) {
    y = mul(x, y);
    ++k;
  }
  return k;
}

Idx FiniteLoop::power(Idx x, std::int64_t k) const {
  const std::int64_t c = element_order(x);
  std::int64_t r = k % c;
  if (r < 0) r += c;
  Idx y = 0;
  for (std::int64_t i = 0; i < r; ++i) y = mul(x, y);
  return y;
}

FiniteLoop FiniteLoop::with_name(std::string name) const {
  FiniteLoop copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string FiniteLoop::label(Idx x) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

detail::LoopCache& FiniteLoop::cache() const { return *cache_; }

Subloop::Subloop(const FiniteLoop& parent, std::vector<Idx> elements)
    : parent_(&parent), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const Idx n = parent.order();
  if (elems_.empty() || elems_.front() != 0)
    fail(ErrorCode::NotASubloop, "subloop must contain the identity");
  if (elems_.back() >= n)
    fail(ErrorCode::NotASubloop, "element out of range");
  member_.assign(static_cast<std::size_t>(n), 0);
  for (Idx e : elems_) member_[static_cast<std::size_t>(e)] = 1;
  for (Idx a : elems_)
    for (Idx b : elems_)
      if (!member_[static_cast<std::size_t>(parent.mul(a, b))])
        fail(ErrorCode::NotASubloop,
             "not closed: " + std::to_string(a) + " * " + std::to_string(b));
  fingerprint_ = hash_indices(elems_);
}

Subloop::Subloop(unchecked_t, const FiniteLoop& parent,
                 std::vector<Idx> sorted_elements)
    : parent_(&parent), elems_(std::move(sorted_elements)) {
  member_.assign(static_cast<std::size_t>(parent.order()), 0);
  for (Idx e : elems_) member_[static_cast<std::size_t>(e)] = 1;
  fingerprint_ = hash_indices(elems_);
}

TripleReport check_moufang(const FiniteLoop& loop) {
  const Idx n = loop.order();
  std::vector<Idx> rx(static_cast<std::size_t>(n));
  for (Idx x = 0; x < n; ++x) {
    for (Idx z = 0; z < n; ++z) rx[static_cast<std::size_t>(z)] = loop.mul(z, x);
    const Idx* row_x = loop.row(x);
    for (Idx y = 0; y < n; ++y) {
      const Idx* row_y = loop.row(y);
      const Idx* row_xy = loop.row(loop.mul(x, y));
      for (Idx z = 0; z < n; ++z) {
        Idx lhs = row_xy[rx[static_cast<std::size_t>(z)]];
        Idx rhs = rx[static_cast<std::size_t>(row_x[row_y[z]])];
        if (lhs != rhs) return {false, {x, y, z}};
      }
    }
  }
  return {};
}

TripleReport check_associative(const FiniteLoop& loop) {
  const Idx n = loop.order();
  for (Idx x = 0; x < n; ++x) {
    const Idx* row_x = loop.row(x);
    for (Idx y = 0; y < n; ++y) {
      const Idx* row_y = loop.row(y);
      const Idx* row_xy = loop.row(row_x[y]);
      for (Idx z = 0; z < n; ++z) {
        if (row_xy[z] != row_x[row_y[z]]) return {false, {x, y, z}};
      }
    }
  }
  return {};
}

bool is_commutative(const FiniteLoop& loop) {
  const Idx n = loop.order();
  for (Idx x = 0; x < n; ++x)
    for (Idx y = x + 1; y < n; ++y)
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
  return true;
}

Idx commutator(const FiniteLoop& loop, Idx x, Idx y) {
  return loop.ldiv(loop.mul(y, x), loop.mul(x, y));
}

Subloop nucleus(const FiniteLoop& loop) {
  const Idx n = loop.order();
  std::vector<Idx> ra(static_cast<std::size_t>(n));
  std::vector<Idx> members;
  for (Idx a = 0; a < n; ++a) {
    const Idx* row_a = loop.row(a);
    for (Idx z = 0; z < n; ++z) ra[static_cast<std::size_t>(z)] = loop.mul(z, a);
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x) {
      const Idx* row_x = loop.row(x);
      const Idx* row_ax = loop.row(row_a[x]);
      const Idx* row_xa = loop.row(row_x[a]);
      for (Idx y = 0; y < n; ++y) {
        // a(xy) == (ax)y, (xa)y == x(ay), (xy)a == x(ya)
        if (row_a[row_x[y]] != row_ax[y] || row_xa[y] != row_x[row_a[y]] ||
            ra[static_cast<std::size_t>(row_x[y])] !=
                row_x[ra[static_cast<std::size_t>(y)]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) members.push_back(a);
  }
  return Subloop(loop, std::move(members));
}

namespace {

// Fixed-point closure under the loop product; closure under divisions and
// inverses follows because translations restrict to bijections of the result.
std::optional<std::vector<Idx>> close_under_product(const FiniteLoop& loop,
                                                    std::span<const Idx> gens,
                                                    std::size_t max_size) {
  const Idx n = loop.order();
  std::vector<std::uint8_t> member(static_cast<std::size_t>(n), 0);
  std::vector<Idx> elems;
  auto add = [&](Idx v) {
    if (!member[static_cast<std::size_t>(v)]) {
      member[static_cast<std::size_t>(v)] = 1;
      elems.push_back(v);
    }
  };
  add(0);
  for (Idx g : gens) {
    if (g < 0 || g >= n) fail(ErrorCode::InvalidParameter, "generator out of range");
    add(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > max_size) return std::nullopt;
    for (std::size_t j = 0; j <= i; ++j) {
      add(loop.mul(elems[i], elems[j]));
      add(loop.mul(elems[j], elems[i]));
    }
  }
  if (elems.size() > max_size) return std::nullopt;
  std::sort(elems.begin(), elems.end());
  return elems;
}

struct UnionFind {
  std::vector<Idx> parent;

  explicit UnionFind(Idx n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Idx find(Idx a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
};

// Minimal block system of the multiplication group merging the seed set with
// the identity; the class of 0 is the least normal subloop containing the
// seed. Generators (all left and right translations) are applied through the
// table rows and columns without materializing permutations.
std::vector<Idx> min_block_class_of_zero(const FiniteLoop& loop,
                                         std::span<const Idx> seed) {
  const Idx n = loop.order();
  UnionFind uf(n);
  std::vector<Idx> stack;
  auto merge = [&](Idx a, Idx b) {
    Idx ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) return;
    uf.parent[static_cast<std::size_t>(ra)] = rb;
    stack.push_back(ra);
  };
  for (Idx s : seed) {
    if (s < 0 || s >= n) fail(ErrorCode::InvalidParameter, "seed out of range");
    merge(s, 0);
  }
  while (!stack.empty()) {
    Idx gamma = stack.back();
    stack.pop_back();
    Idx delta = uf.find(gamma);
    const Idx* row_g = loop.row(gamma);
    const Idx* row_d = loop.row(delta);
    for (Idx z = 0; z < n; ++z) {
      merge(row_g[z], row_d[z]);
      merge(loop.mul(z, gamma), loop.mul(z, delta));
    }
  }
  std::vector<Idx> result;
  const Idx zero_rep = uf.find(0);
  for (Idx x = 0; x < n; ++x)
    if (uf.find(x) == zero_rep) result.push_back(x);
  return result;
}

}  // namespace

Subloop generated_subloop(const FiniteLoop& loop, std::span<const Idx> gens) {
  auto elems = close_under_product(loop, gens,
                                   static_cast<std::size_t>(loop.order()));
  return Subloop(Subloop::unchecked, loop, std::move(*elems));
}

std::optional<Subloop> generated_subloop_capped(const FiniteLoop& loop,
                                                std::span<const Idx> gens,
                                                std::size_t max_size) {
  auto elems = close_under_product(loop, gens, max_size);
  if (!elems) return std::nullopt;
  return Subloop(Subloop::unchecked, loop, std::move(*elems));
}

Subloop trivial_subloop(const FiniteLoop& loop) {
  return Subloop(Subloop::unchecked, loop, {0});
}

Subloop whole_subloop(const FiniteLoop& loop) {
  std::vector<Idx> all(static_cast<std::size_t>(loop.order()));
  std::iota(all.begin(), all.end(), 0);
  return Subloop(Subloop::unchecked, loop, std::move(all));
}

Subloop subloop_intersection(const Subloop& a, const Subloop& b) {
  if (&a.parent() != &b.parent())
    fail(ErrorCode::InvalidParameter, "subloops of different parents");
  std::vector<Idx> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subloop(Subloop::unchecked, a.parent(), std::move(out));
}

Subloop subloop_join(const Subloop& a, const Subloop& b) {
  if (&a.parent() != &b.parent())
    fail(ErrorCode::InvalidParameter, "subloops of different parents");
  std::vector<Idx> gens(a.elements());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subloop(a.parent(), gens);
}

Subloop normal_closure(const FiniteLoop& loop, std::span<const Idx> gens) {
  return Subloop(loop, min_block_class_of_zero(loop, gens));
}

bool is_normal(const FiniteLoop& loop, const Subloop& sub) {
  auto closure = min_block_class_of_zero(loop, sub.elements());
  return closure.size() == sub.size();
}

const ClosureAtlas& single_closure_atlas(const FiniteLoop& loop) {
  auto& cache = loop.cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.atlas) return *cache.atlas;

  const Idx n = loop.order();
  ClosureAtlas atlas;
  atlas.closure_of.assign(static_cast<std::size_t>(n), -1);

  // Single-element normal closures are constant on orbits of the inner
  // mappings; the T_x that fix 0 generate a subgroup of those, and their
  // orbit partition is computable in O(n^2), so one block computation per
  // orbit representative suffices.
  UnionFind orbits(n);
  for (Idx x = 1; x < n; ++x) {
    if (loop.mul(loop.ldiv(x, 0), x) != 0) continue;
    for (Idx u = 0; u < n; ++u) {
      Idx tu = loop.mul(loop.ldiv(x, u), x);
      Idx ra = orbits.find(u), rb = orbits.find(tu);
      if (ra != rb) orbits.parent[static_cast<std::size_t>(ra)] = rb;
    }
  }
  std::vector<Idx> rep_of_class(static_cast<std::size_t>(n), -1);
  std::vector<std::int32_t> closure_of_rep(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> seen_fingerprints;
  for (Idx x = 1; x < n; ++x) {
    Idx r = orbits.find(x);
    if (rep_of_class[static_cast<std::size_t>(r)] < 0)
      rep_of_class[static_cast<std::size_t>(r)] = x;
    Idx rep = rep_of_class[static_cast<std::size_t>(r)];
    if (closure_of_rep[static_cast<std::size_t>(rep)] < 0) {
      std::array<Idx, 1> seed{rep};
      auto closure = min_block_class_of_zero(loop, seed);
      std::uint64_t fp = hash_indices(closure);
      std::int32_t id = -1;
      for (std::size_t k = 0; k < seen_fingerprints.size(); ++k) {
        if (seen_fingerprints[k] == fp &&
            atlas.closures[k] == closure) {
          id = static_cast<std::int32_t>(k);
          break;
        }
      }
      if (id < 0) {
        id = static_cast<std::int32_t>(atlas.closures.size());
        atlas.closures.push_back(std::move(closure));
        seen_fingerprints.push_back(fp);
      }
      closure_of_rep[static_cast<std::size_t>(rep)] = id;
    }
    atlas.closure_of[static_cast<std::size_t>(x)] =
        closure_of_rep[static_cast<std::size_t>(rep)];
  }
  cache.atlas = std::move(atlas);
  return *cache.atlas;
}

std::vector<Subloop> minimal_normal_subloops(const FiniteLoop& loop) {
  if (loop.order() <= 1) return {};
  const ClosureAtlas& atlas = single_closure_atlas(loop);
  std::vector<const std::vector<Idx>*> candidates;
  candidates.reserve(atlas.closures.size());
  for (const auto& c : atlas.closures) candidates.push_back(&c);
  std::sort(candidates.begin(), candidates.end(),
            [](const std::vector<Idx>* a, const std::vector<Idx>* b) {
              if (a->size() != b->size()) return a->size() < b->size();
              return *a < *b;
            });
  std::vector<Subloop> kept;
  for (const auto* cand : candidates) {
    std::vector<std::uint8_t> member(static_cast<std::size_t>(loop.order()), 0);
    for (Idx e : *cand) member[static_cast<std::size_t>(e)] = 1;
    bool minimal = true;
    for (const Subloop& k : kept) {
      if (k.size() >= cand->size()) break;
      bool subset = true;
      for (Idx e : k.elements()) {
        if (!member[static_cast<std::size_t>(e)]) {
          subset = false;
          break;
        }
      }
      if (subset) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.emplace_back(loop, *cand);
  }
  return kept;
}

QuotientResult quotient(const FiniteLoop& loop, const Subloop& sub) {
  if (&sub.parent() != &loop)
    fail(ErrorCode::InvalidParameter, "subloop of a different parent");
  if (!is_normal(loop, sub)) fail(ErrorCode::NotNormal, "subloop is not normal");
  const Idx n = loop.order();
  const Idx m = static_cast<Idx>(static_cast<std::size_t>(n) / sub.size());
  std::vector<Idx> proj(static_cast<std::size_t>(n), -1);
  std::vector<Idx> reps;
  reps.reserve(static_cast<std::size_t>(m));
  for (Idx x = 0; x < n; ++x) {
    if (proj[static_cast<std::size_t>(x)] >= 0) continue;
    Idx id = static_cast<Idx>(reps.size());
    reps.push_back(x);
    for (Idx s : sub.elements()) {
      Idx y = loop.mul(s, x);
      if (proj[static_cast<std::size_t>(y)] >= 0 &&
          proj[static_cast<std::size_t>(y)] != id)
        fail(ErrorCode::InternalError, "coset partition inconsistency");
      proj[static_cast<std::size_t>(y)] = id;
    }
  }
  std::vector<Idx> flat(static_cast<std::size_t>(m) * m);
  for (Idx a = 0; a < m; ++a)
    for (Idx b = 0; b < m; ++b)
      flat[static_cast<std::size_t>(a) * m + b] =
          proj[static_cast<std::size_t>(loop.mul(reps[a], reps[b]))];
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if (proj[static_cast<std::size_t>(loop.mul(x, y))] !=
          flat[static_cast<std::size_t>(proj[static_cast<std::size_t>(x)]) * m +
               proj[static_cast<std::size_t>(y)]])
        fail(ErrorCode::InternalError, "projection is not a homomorphism");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (Idx r : reps) labels.push_back(loop.label(r));
  std::string name = loop.name().empty() ? "quotient" : loop.name() + "/N";
  FiniteLoop q = FiniteLoop::from_flat_table(std::move(flat), m, std::move(name),
                                             std::move(labels));
  return {std::move(q), std::move(proj)};
}

FiniteLoop extract_subloop(const FiniteLoop& loop, const Subloop& sub) {
  if (&sub.parent() != &loop)
    fail(ErrorCode::InvalidParameter, "subloop of a different parent");
  const auto& elems = sub.elements();
  const Idx m = static_cast<Idx>(elems.size());
  std::vector<Idx> pos(static_cast<std::size_t>(loop.order()), -1);
  for (Idx i = 0; i < m; ++i) pos[static_cast<std::size_t>(elems[i])] = i;
  std::vector<Idx> flat(static_cast<std::size_t>(m) * m);
  for (Idx i = 0; i < m; ++i)
    for (Idx j = 0; j < m; ++j) {
      Idx p = pos[static_cast<std::size_t>(loop.mul(elems[i], elems[j]))];
      if (p < 0) fail(ErrorCode::NotASubloop, "element set is not closed");
      flat[static_cast<std::size_t>(i) * m + j] = p;
    }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (Idx e : elems) labels.push_back(loop.label(e));
  std::string name =
      loop.name().empty() ? "subloop" : loop.name() + ":sub" + std::to_string(m);
  return FiniteLoop::from_flat_table(std::move(flat), m, std::move(name),
                                     std::move(labels));
}

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b) {
  const std::size_t na = static_cast<std::size_t>(a.order());
  const std::size_t nb = static_cast<std::size_t>(b.order());
  if (na * nb > kMaxTableOrder)
    fail(ErrorCode::TableTooLarge,
         "product order " + std::to_string(na * nb) + " exceeds the cap " +
             std::to_string(kMaxTableOrder));
  const Idx m = static_cast<Idx>(na * nb);
  std::vector<Idx> flat(static_cast<std::size_t>(m) * m);
  for (Idx x1 = 0; x1 < a.order(); ++x1)
    for (Idx x2 = 0; x2 < b.order(); ++x2) {
      const Idx x = static_cast<Idx>(x1 * static_cast<Idx>(nb) + x2);
      for (Idx y1 = 0; y1 < a.order(); ++y1) {
        Idx p1 = a.mul(x1, y1);
        const Idx* row2 = b.row(x2);
        Idx* out = flat.data() + static_cast<std::size_t>(x) * m +
                   static_cast<std::size_t>(y1) * nb;
        for (Idx y2 = 0; y2 < b.order(); ++y2)
          out[y2] = static_cast<Idx>(p1 * static_cast<Idx>(nb) + row2[y2]);
      }
    }
  std::string name;
  if (!a.name().empty() || !b.name().empty())
    name = (a.name().empty() ? "?" : a.name()) + " x " +
           (b.name().empty() ? "?" : b.name());
  return FiniteLoop::from_flat_table(std::move(flat), m, std::move(name));
}

namespace {

struct PartialMap {
  std::vector<Idx> image;
  std::vector<std::uint8_t> used;
  std::vector<Idx> mapped;

  explicit PartialMap(Idx n)
      : image(static_cast<std::size_t>(n), -1),
        used(static_cast<std::size_t>(n), 0) {}
};

// Forces x -> u and propagates products against all mapped elements.
bool extend_map(const FiniteLoop& a, const FiniteLoop& b, PartialMap& m, Idx x,
                Idx u) {
  std::vector<std::pair<Idx, Idx>> queue{{x, u}};
  while (!queue.empty()) {
    auto [p, q] = queue.back();
    queue.pop_back();
    Idx existing = m.image[static_cast<std::size_t>(p)];
    if (existing >= 0) {
      if (existing != q) return false;
      continue;
    }
    if (m.used[static_cast<std::size_t>(q)]) return false;
    m.image[static_cast<std::size_t>(p)] = q;
    m.used[static_cast<std::size_t>(q)] = 1;
    m.mapped.push_back(p);
    for (Idx t : m.mapped) {
      Idx ti = m.image[static_cast<std::size_t>(t)];
      queue.emplace_back(a.mul(p, t), b.mul(q, ti));
      queue.emplace_back(a.mul(t, p), b.mul(ti, q));
    }
  }
  return true;
}

bool iso_dfs(const FiniteLoop& a, const FiniteLoop& b,
             const std::vector<Idx>& gens, std::size_t k,
             const std::vector<Idx>& orders_b, PartialMap m,
             std::vector<Idx>& out) {
  while (k < gens.size() && m.image[static_cast<std::size_t>(gens[k])] >= 0) ++k;
  if (k == gens.size()) {
    if (m.mapped.size() != static_cast<std::size_t>(a.order())) return false;
    out = m.image;
    return true;
  }
  const Idx g = gens[k];
  const Idx want = a.element_order(g);
  for (Idx c = 0; c < b.order(); ++c) {
    if (m.used[static_cast<std::size_t>(c)]) continue;
    if (orders_b[static_cast<std::size_t>(c)] != want) continue;
    PartialMap next = m;
    if (extend_map(a, b, next, g, c) &&
        iso_dfs(a, b, gens, k + 1, orders_b, std::move(next), out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> find_isomorphism(const FiniteLoop& a,
                                                 const FiniteLoop& b) {
  if (a.order() != b.order()) return std::nullopt;
  const Idx n = a.order();
  std::vector<Idx> orders_a(static_cast<std::size_t>(n)),
      orders_b(static_cast<std::size_t>(n));
  for (Idx x = 0; x < n; ++x) {
    orders_a[static_cast<std::size_t>(x)] = a.element_order(x);
    orders_b[static_cast<std::size_t>(x)] = b.element_order(x);
  }
  {
    auto sa = orders_a;
    auto sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Greedy small generating sequence of a.
  std::vector<Idx> gens;
  Subloop span = trivial_subloop(a);
  while (span.size() < static_cast<std::size_t>(n)) {
    Idx next = -1;
    for (Idx x = 0; x < n; ++x)
      if (!span.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    std::vector<Idx> g2(gens);
    span = generated_subloop(a, g2);
  }
  PartialMap m(n);
  if (!extend_map(a, b, m, 0, 0)) return std::nullopt;
  std::vector<Idx> out;
  if (iso_dfs(a, b, gens, 0, orders_b, std::move(m), out)) return out;
  return std::nullopt;
}

}  // namespace moufang
