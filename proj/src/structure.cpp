#include "moufang/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "moufang/errors.hpp"

namespace moufang {
namespace {

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Largest power of p dividing n.
std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// (q^2 + 1) / gcd(2, q - 1): primes dividing this value are exactly the
// non-Sylow primes contributed by a Paige factor with parameter q.
std::int64_t paige_obstruction(std::int64_t q) {
  std::int64_t d = (q % 2 == 1) ? 2 : 1;
  return (q * q + 1) / d;
}

// Inverse of paige_order, restricted to prime-power parameters.
std::optional<std::int64_t> paige_parameter(std::int64_t order) {
  for (std::int64_t q = 2;; ++q) {
    std::int64_t po = paige_order(q);
    if (po > order) return std::nullopt;
    if (po == order && is_prime_power(q)) return q;
  }
}

bool subloop_less(const Subloop& a, const Subloop& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

std::string join_int64(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

// Composition factors of one chief factor, given as a standalone loop.
std::vector<std::pair<FactorKind, int>> decompose_factor(
    const FiniteLoop& factor) {
  const std::int64_t m = factor.order();
  if (m <= 1) fail(ErrorCode::InternalError, "trivial chief factor");
  if (!is_associative(factor)) {
    auto q = paige_parameter(m);
    if (!q)
      fail(ErrorCode::UnrecognizedSimpleFactor,
           "nonassociative chief factor of order " + std::to_string(m) +
               " matches no Paige loop order");
    return {{paige_factor(*q), 1}};
  }
  if (is_commutative(factor)) {
    std::int64_t p = 2;
    while (m % p != 0) ++p;
    if (!is_power_of(m, p))
      fail(ErrorCode::InternalError,
           "abelian chief factor of order " + std::to_string(m) +
               " is not of prime power order");
    for (Idx x = 1; x < factor.order(); ++x)
      if (factor.element_order(x) != p)
        fail(ErrorCode::InternalError,
             "abelian chief factor is not elementary");
    int k = 0;
    for (std::int64_t t = m; t > 1; t /= p) ++k;
    return {{cyclic_prime_factor(p), k}};
  }
  auto mins = minimal_normal_subloops(factor);
  std::sort(mins.begin(), mins.end(), subloop_less);
  if (mins.size() == 1 && mins.front().is_whole())
    return {{simple_group_factor(m), 1}};
  // A nonabelian nonsimple chief factor splits as a product of isomorphic
  // simple groups, which appear as its own minimal normal subloops.
  const std::int64_t s = static_cast<std::int64_t>(mins.front().size());
  std::int64_t product = 1;
  for (const auto& sub : mins) {
    if (static_cast<std::int64_t>(sub.size()) != s)
      fail(ErrorCode::InternalError,
           "chief factor has minimal normal subloops of unequal orders");
    FiniteLoop piece = extract_subloop(factor, sub);
    auto piece_mins = minimal_normal_subloops(piece);
    if (!(piece_mins.size() == 1 && piece_mins.front().is_whole()))
      fail(ErrorCode::InternalError,
           "component of a chief factor is not simple");
    product *= s;
  }
  if (product != m)
    fail(ErrorCode::InternalError,
         "chief factor order is not the product of its components");
  return {{simple_group_factor(s), static_cast<int>(mins.size())}};
}

// Paige parameters (with multiplicity, sorted) among the composition
// factors. Memoized per Cayley table since the same loop is re-extracted
// repeatedly during radical computations.
std::vector<std::int64_t> paige_parameters_of(const FiniteLoop& loop) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::vector<std::int64_t>> memo;
  const std::uint64_t key = loop.table_fingerprint();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::vector<std::int64_t> qs;
  CompositionData data = chief_decomposition(loop);
  for (const auto& step : data.steps)
    for (const auto& entry : step.decomposition)
      if (entry.first.kind == FactorClass::Paige)
        for (int i = 0; i < entry.second; ++i) qs.push_back(entry.first.q);
  std::sort(qs.begin(), qs.end());
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, qs);
  return qs;
}

bool subloop_is_group_type(const FiniteLoop& loop, const Subloop& sub) {
  if (sub.is_whole()) return paige_parameters_of(loop).empty();
  return paige_parameters_of(extract_subloop(loop, sub)).empty();
}

SylowVerdict verdict_for_subloop(const FiniteLoop& loop, const Subloop& sub,
                                 std::int64_t p) {
  if (sub.is_whole()) return sylow_verdict(loop, p);
  return sylow_verdict(extract_subloop(loop, sub), p);
}

// Join of the distinct single-element normal closures accepted by keep.
Subloop join_of_closures(
    const FiniteLoop& loop,
    const std::function<bool(const Subloop&)>& keep) {
  const ClosureAtlas& atlas = single_closure_atlas(loop);
  Subloop result = trivial_subloop(loop);
  for (const auto& closure : atlas.closures) {
    Subloop sub(loop, closure);
    if (keep(sub)) result = subloop_join(result, sub);
    if (result.is_whole()) break;
  }
  return result;
}

Subloop group_type_radical_raw(const FiniteLoop& loop) {
  return join_of_closures(loop, [&](const Subloop& sub) {
    return subloop_is_group_type(loop, sub);
  });
}

// Deduplicating store of element lists keyed by content hash.
class SubsetStore {
 public:
  // Returns the index of elems, inserting it when new; new_entry reports
  // whether an insertion happened.
  std::size_t insert(std::vector<Idx> elems, bool* new_entry) {
    const std::uint64_t key =
        fnv1a64(elems.data(), elems.size() * sizeof(Idx));
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket)
      if (entries_[idx] == elems) {
        if (new_entry) *new_entry = false;
        return idx;
      }
    entries_.push_back(std::move(elems));
    bucket.push_back(entries_.size() - 1);
    if (new_entry) *new_entry = true;
    return entries_.size() - 1;
  }

  std::size_t size() const { return entries_.size(); }
  std::vector<std::vector<Idx>>& entries() { return entries_; }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<std::vector<Idx>> entries_;
};

std::vector<Subloop> subloops_from_store(const FiniteLoop& loop,
                                         SubsetStore& store) {
  std::vector<Subloop> out;
  out.reserve(store.size());
  for (auto& elems : store.entries())
    out.emplace_back(Subloop::unchecked, loop, std::move(elems));
  std::sort(out.begin(), out.end(), subloop_less);
  return out;
}

}  // namespace

bool operator==(const FactorKind& a, const FactorKind& b) {
  return a.kind == b.kind && a.order == b.order && a.p == b.p && a.q == b.q;
}

std::string factor_name(const FactorKind& kind) {
  switch (kind.kind) {
    case FactorClass::CyclicPrime:
      return "Z" + std::to_string(kind.p);
    case FactorClass::Paige:
      return "Paige(" + std::to_string(kind.q) + ")";
    case FactorClass::SimpleGroup:
      break;
  }
  if (!kind.name.empty()) return kind.name;
  return "Simple(" + std::to_string(kind.order) + ")";
}

FactorKind cyclic_prime_factor(std::int64_t p) {
  if (!is_prime_int(p))
    fail(ErrorCode::InvalidParameter,
         std::to_string(p) + " is not prime");
  FactorKind kind{FactorClass::CyclicPrime, p, p, 0, {}};
  kind.name = factor_name(kind);
  return kind;
}

FactorKind paige_factor(std::int64_t q) {
  FactorKind kind{FactorClass::Paige, paige_order(q), 0, q, {}};
  kind.name = factor_name(kind);
  return kind;
}

FactorKind simple_group_factor(std::int64_t order) {
  if (order < 2)
    fail(ErrorCode::InvalidParameter, "simple factor order must exceed 1");
  FactorKind kind{FactorClass::SimpleGroup, order, 0, 0, {}};
  switch (order) {
    case 60: kind.name = "A5"; break;
    case 168: kind.name = "PSL(2,7)"; break;
    case 360: kind.name = "A6"; break;
    case 504: kind.name = "PSL(2,8)"; break;
    case 660: kind.name = "PSL(2,11)"; break;
    default: kind.name = factor_name(kind); break;
  }
  return kind;
}

std::int64_t paige_order(std::int64_t q) {
  if (q < 2) fail(ErrorCode::InvalidParameter, "field size must exceed 1");
  std::int64_t d = (q % 2 == 1) ? 2 : 1;
  return q * q * q * (q * q * q * q - 1) / d;
}

std::vector<std::pair<FactorKind, int>> CompositionData::factors() const {
  std::vector<std::pair<FactorKind, int>> out;
  for (const auto& step : steps)
    for (const auto& entry : step.decomposition) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) {
        return e.first == entry.first;
      });
      if (it == out.end())
        out.push_back(entry);
      else
        it->second += entry.second;
    }
  auto key = [](const std::pair<FactorKind, int>& e) {
    return std::make_tuple(static_cast<int>(e.first.kind), e.first.order,
                           e.first.p, e.first.q);
  };
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

CompositionData chief_decomposition(const FiniteLoop& loop) {
  const Idx n = loop.order();
  CompositionData data;
  data.chain.push_back(trivial_subloop(loop));
  std::vector<Idx> proj(static_cast<std::size_t>(n));
  std::iota(proj.begin(), proj.end(), 0);
  const FiniteLoop* current = &loop;
  std::optional<QuotientResult> held;
  while (static_cast<Idx>(data.chain.back().size()) != n) {
    auto mins = minimal_normal_subloops(*current);
    if (mins.empty())
      fail(ErrorCode::InternalError,
           "nontrivial loop without minimal normal subloops");
    std::sort(mins.begin(), mins.end(), subloop_less);
    const Subloop& chosen = mins.front();
    FiniteLoop factor = extract_subloop(*current, chosen);
    std::vector<Idx> lifted;
    lifted.reserve(data.chain.back().size() * chosen.size());
    for (Idx x = 0; x < n; ++x)
      if (chosen.contains(proj[static_cast<std::size_t>(x)]))
        lifted.push_back(x);
    Subloop next(loop, std::move(lifted));
    if (!is_normal(loop, next))
      fail(ErrorCode::InternalError,
           "preimage of a minimal normal subloop is not normal");
    auto decomposition = decompose_factor(factor);
    std::int64_t product = 1;
    for (const auto& entry : decomposition)
      for (int i = 0; i < entry.second; ++i) product *= entry.first.order;
    if (product != factor.order())
      fail(ErrorCode::InternalError,
           "factor decomposition does not multiply to the factor order");
    data.steps.push_back(
        ChiefStep{static_cast<std::int64_t>(data.chain.back().size()),
                  static_cast<std::int64_t>(next.size()), std::move(factor),
                  std::move(decomposition)});
    data.chain.push_back(std::move(next));
    if (static_cast<Idx>(data.chain.back().size()) == n) break;
    held = quotient(loop, data.chain.back());
    current = &held->loop;
    proj = std::move(held->projection);
  }
  return data;
}

SylowVerdict sylow_verdict(const FiniteLoop& loop, std::int64_t p) {
  if (!is_prime_int(p))
    fail(ErrorCode::InvalidParameter,
         "Sylow verdicts are defined for primes, got " + std::to_string(p));
  SylowVerdict verdict;
  verdict.p = p;
  for (std::int64_t q : paige_parameters_of(loop))
    if (paige_obstruction(q) % p == 0) verdict.witnesses.push_back(q);
  verdict.witnesses.erase(
      std::unique(verdict.witnesses.begin(), verdict.witnesses.end()),
      verdict.witnesses.end());
  verdict.sylow = verdict.witnesses.empty();
  return verdict;
}

std::vector<SylowVerdict> sylow_primes(const FiniteLoop& loop) {
  std::vector<SylowVerdict> out;
  for (std::int64_t p : prime_divisors(loop.order()))
    out.push_back(sylow_verdict(loop, p));
  return out;
}

Subloop find_p_sylow(const FiniteLoop& loop, std::int64_t p) {
  SylowVerdict verdict = sylow_verdict(loop, p);
  if (!verdict.sylow)
    fail(ErrorCode::NotSylowPrime,
         "p=" + std::to_string(p) +
             " is obstructed by Paige factors with q in {" +
             join_int64(verdict.witnesses) + "}");
  const Idx n = loop.order();
  const std::int64_t target = p_part(n, p);
  if (target == 1) return trivial_subloop(loop);

  std::vector<Idx> candidates;
  for (Idx x = 1; x < n; ++x)
    if (is_power_of(loop.element_order(x), p)) candidates.push_back(x);

  SubsetStore seen;
  const std::size_t budget = default_budget();
  std::optional<Subloop> found;
  std::vector<Idx> gens;

  std::function<bool(const Subloop&)> dfs = [&](const Subloop& cur) -> bool {
    if (static_cast<std::int64_t>(cur.size()) == target) {
      found = cur;
      return true;
    }
    for (Idx y : candidates) {
      if (cur.contains(y)) continue;
      gens.assign(cur.elements().begin(), cur.elements().end());
      gens.push_back(y);
      auto ext = generated_subloop_capped(loop, gens,
                                          static_cast<std::size_t>(target));
      if (!ext) continue;
      if (!is_power_of(static_cast<std::int64_t>(ext->size()), p)) continue;
      bool fresh = false;
      seen.insert(ext->elements(), &fresh);
      if (!fresh) continue;
      if (seen.size() > budget)
        fail(ErrorCode::ClosureBudgetExceeded,
             "p-subloop search exceeded the global budget");
      if (dfs(*ext)) return true;
    }
    return false;
  };

  Subloop trivial = trivial_subloop(loop);
  seen.insert(trivial.elements(), nullptr);
  if (!dfs(trivial))
    fail(ErrorCode::InternalError,
         "verdict affirms p=" + std::to_string(p) +
             " but no subloop of order " + std::to_string(target) +
             " was found");
  return *found;
}

std::int64_t quasi_sylow_order(const FiniteLoop& loop, std::int64_t p) {
  if (!is_prime_int(p))
    fail(ErrorCode::InvalidParameter,
         "quasi Sylow orders are defined for primes, got " +
             std::to_string(p));
  CompositionData data = chief_decomposition(loop);
  std::int64_t result = 1;
  for (const auto& step : data.steps)
    for (const auto& entry : step.decomposition) {
      std::int64_t contribution = 1;
      switch (entry.first.kind) {
        case FactorClass::CyclicPrime:
          contribution = (entry.first.p == p) ? p : 1;
          break;
        case FactorClass::SimpleGroup:
          contribution = p_part(entry.first.order, p);
          break;
        case FactorClass::Paige:
          contribution = (paige_obstruction(entry.first.q) % p == 0)
                             ? 1
                             : p_part(entry.first.order, p);
          break;
      }
      for (int i = 0; i < entry.second; ++i) result *= contribution;
    }
  return result;
}

Subloop find_quasi_p_sylow(const FiniteLoop& loop, std::int64_t p) {
  const std::int64_t expected = quasi_sylow_order(loop, p);
  Subloop radical = gr_p(loop, p);
  Subloop result = [&] {
    if (radical.is_whole()) return find_p_sylow(loop, p);
    FiniteLoop inner = extract_subloop(loop, radical);
    Subloop inner_sylow = find_p_sylow(inner, p);
    std::vector<Idx> mapped;
    mapped.reserve(inner_sylow.size());
    for (Idx i : inner_sylow.elements())
      mapped.push_back(radical.elements()[static_cast<std::size_t>(i)]);
    return Subloop(loop, std::move(mapped));
  }();
  if (static_cast<std::int64_t>(result.size()) != expected)
    fail(ErrorCode::InternalError,
         "quasi Sylow subloop has order " + std::to_string(result.size()) +
             ", expected " + std::to_string(expected));
  return result;
}

bool is_group_type(const FiniteLoop& loop) {
  return paige_parameters_of(loop).empty();
}

Subloop group_type_radical(const FiniteLoop& loop) {
  Subloop result = group_type_radical_raw(loop);
  if (!is_normal(loop, result))
    fail(ErrorCode::InternalError, "radical join is not normal");
  if (!result.is_trivial()) {
    if (!subloop_is_group_type(loop, result))
      fail(ErrorCode::InternalError, "radical join is not of group type");
    QuotientResult qr = quotient(loop, result);
    if (qr.loop.order() > 1 && !group_type_radical_raw(qr.loop).is_trivial())
      fail(ErrorCode::InternalError,
           "quotient by the radical has a nontrivial radical");
  }
  return result;
}

Subloop gr_p(const FiniteLoop& loop, std::int64_t p) {
  if (!is_prime_int(p))
    fail(ErrorCode::InvalidParameter,
         "radicals are defined for primes, got " + std::to_string(p));
  Subloop result = join_of_closures(loop, [&](const Subloop& sub) {
    return verdict_for_subloop(loop, sub, p).sylow;
  });
  if (!is_normal(loop, result))
    fail(ErrorCode::InternalError, "radical join is not normal");
  if (!verdict_for_subloop(loop, result, p).sylow)
    fail(ErrorCode::InternalError,
         "p is not a Sylow prime for its own radical");
  QuotientResult qr = quotient(loop, result);
  for (Idx x = 0; x < qr.loop.order(); ++x)
    if (qr.loop.element_order(x) % p == 0)
      fail(ErrorCode::InternalError,
           "quotient by the p-radical keeps p-torsion");
  return result;
}

SocleReport socle_check(const FiniteLoop& loop) {
  Subloop radical = group_type_radical(loop);
  if (!radical.is_trivial())
    fail(ErrorCode::RadicalNotTrivial,
         "group-type radical has order " + std::to_string(radical.size()));
  auto mins = minimal_normal_subloops(loop);
  std::sort(mins.begin(), mins.end(), subloop_less);
  Subloop socle = trivial_subloop(loop);
  for (const auto& sub : mins) socle = subloop_join(socle, sub);
  if (!is_normal(loop, socle))
    fail(ErrorCode::InternalError, "socle join is not normal");

  bool ok = true;
  std::string note;
  auto complain = [&](const std::string& msg) {
    ok = false;
    if (note.empty()) note = msg;
  };

  std::vector<FactorKind> factors;
  factors.reserve(mins.size());
  for (const auto& sub : mins) {
    FiniteLoop inner = extract_subloop(loop, sub);
    auto q = paige_parameter(inner.order());
    bool good = q.has_value() && !is_associative(inner);
    if (good) {
      auto inner_mins = minimal_normal_subloops(inner);
      good = inner_mins.size() == 1 && inner_mins.front().is_whole();
    }
    if (good) {
      factors.push_back(paige_factor(*q));
    } else {
      factors.push_back(FactorKind{FactorClass::SimpleGroup, inner.order(),
                                   0, 0, "Unrecognized"});
      complain("minimal normal subloop of order " +
               std::to_string(inner.order()) +
               " is not a simple Paige loop");
    }
  }

  QuotientResult qr = quotient(loop, socle);
  bool elementary = is_power_of(qr.loop.order(), 2) &&
                    is_associative(qr.loop) && is_commutative(qr.loop);
  if (elementary)
    for (Idx x = 1; x < qr.loop.order(); ++x)
      if (qr.loop.element_order(x) != 2) {
        elementary = false;
        break;
      }
  if (!elementary)
    complain("quotient by the socle is not elementary abelian of exponent 2");

  return SocleReport{std::move(socle),      std::move(mins),
                     std::move(factors),    std::move(qr.loop),
                     elementary,            ok,
                     std::move(note)};
}

std::vector<Subloop> enumerate_subloops(const FiniteLoop& loop) {
  const Idx n = loop.order();
  const std::size_t budget = default_budget();
  SubsetStore store;
  std::deque<std::size_t> work;
  work.push_back(store.insert({0}, nullptr));
  std::vector<Idx> gens;
  while (!work.empty()) {
    const std::vector<Idx> base = store.entries()[work.front()];
    work.pop_front();
    if (static_cast<Idx>(base.size()) == n) continue;
    for (Idx y = 0; y < n; ++y) {
      if (std::binary_search(base.begin(), base.end(), y)) continue;
      gens = base;
      gens.push_back(y);
      Subloop ext = generated_subloop(loop, gens);
      bool fresh = false;
      std::size_t idx = store.insert(ext.elements(), &fresh);
      if (!fresh) continue;
      if (store.size() > budget)
        fail(ErrorCode::ClosureBudgetExceeded,
             "subloop enumeration exceeded the global budget");
      work.push_back(idx);
    }
  }
  return subloops_from_store(loop, store);
}

std::vector<Subloop> enumerate_p_subloops(const FiniteLoop& loop,
                                          std::int64_t p) {
  if (!is_prime_int(p))
    fail(ErrorCode::InvalidParameter,
         "p-subloop enumeration needs a prime, got " + std::to_string(p));
  const Idx n = loop.order();
  const std::int64_t cap = p_part(n, p);
  const std::size_t budget = default_budget();
  std::vector<Idx> candidates;
  for (Idx x = 1; x < n; ++x)
    if (is_power_of(loop.element_order(x), p)) candidates.push_back(x);

  SubsetStore store;
  std::deque<std::size_t> work;
  work.push_back(store.insert({0}, nullptr));
  std::vector<Idx> gens;
  while (!work.empty()) {
    const std::vector<Idx> base = store.entries()[work.front()];
    work.pop_front();
    for (Idx y : candidates) {
      if (std::binary_search(base.begin(), base.end(), y)) continue;
      gens = base;
      gens.push_back(y);
      auto ext =
          generated_subloop_capped(loop, gens, static_cast<std::size_t>(cap));
      if (!ext) continue;
      if (!is_power_of(static_cast<std::int64_t>(ext->size()), p)) continue;
      bool fresh = false;
      std::size_t idx = store.insert(ext->elements(), &fresh);
      if (!fresh) continue;
      if (store.size() > budget)
        fail(ErrorCode::ClosureBudgetExceeded,
             "p-subloop enumeration exceeded the global budget");
      work.push_back(idx);
    }
  }
  return subloops_from_store(loop, store);
}

}  // namespace moufang
