#pragma once

// Independent brute-force reference implementations used only by tests.
// They deliberately avoid the library's closure, normality and group-order
// algorithms so that agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/perm.hpp"

namespace oracles {

using moufang::FiniteLoop;
using moufang::Idx;

// All subloops by scanning every subset containing the identity. Only
// sensible for order <= 16.
inline std::vector<std::vector<Idx>> brute_subloops(const FiniteLoop& loop) {
  const int n = loop.order();
  std::vector<std::vector<Idx>> found;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Idx> elems{0};
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) elems.push_back(static_cast<Idx>(i));
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (Idx e : elems) member[static_cast<std::size_t>(e)] = 1;
    bool closed = true;
    for (Idx a : elems) {
      for (Idx b : elems)
        if (!member[static_cast<std::size_t>(loop.mul(a, b))]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) found.push_back(std::move(elems));
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<Idx>& a, const std::vector<Idx>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

// Closure of gens with the identity, by rescanning all products until no
// new element appears.
inline std::vector<Idx> oracle_closure(const FiniteLoop& loop,
                                       std::vector<Idx> gens) {
  std::set<Idx> members(gens.begin(), gens.end());
  members.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Idx> snapshot(members.begin(), members.end());
    for (Idx a : snapshot)
      for (Idx b : snapshot)
        if (members.insert(loop.mul(a, b)).second) grew = true;
  }
  return {members.begin(), members.end()};
}

// Normality straight from the definition: the set must be stable under
// every inner mapping T_x, L_{x,y}, R_{x,y}.
inline bool oracle_is_normal(const FiniteLoop& loop,
                             const std::vector<Idx>& elems) {
  const int n = loop.order();
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (Idx e : elems) member[static_cast<std::size_t>(e)] = 1;
  auto stable = [&](auto&& image) {
    for (Idx u : elems)
      if (!member[static_cast<std::size_t>(image(u))]) return false;
    return true;
  };
  for (Idx x = 0; x < n; ++x) {
    if (!stable([&](Idx u) { return loop.ldiv(x, loop.mul(u, x)); }))
      return false;
    for (Idx y = 0; y < n; ++y) {
      const Idx xy = loop.mul(x, y);
      if (!stable([&](Idx u) {
            return loop.ldiv(xy, loop.mul(x, loop.mul(y, u)));
          }))
        return false;
      if (!stable([&](Idx u) {
            return loop.rdiv(loop.mul(loop.mul(u, x), y), xy);
          }))
        return false;
    }
  }
  return true;
}

// Order of the permutation group generated by gens, by plain breadth-first
// multiplication. Only sensible for a few hundred elements.
inline std::size_t brute_perm_group_order(
    const std::vector<moufang::Perm>& gens) {
  if (gens.empty()) return 1;
  const Idx degree = gens.front().degree();
  moufang::Perm id = moufang::Perm::identity(degree);
  std::set<std::vector<Idx>> seen;
  std::deque<moufang::Perm> work;
  seen.insert(id.images());
  work.push_back(id);
  while (!work.empty()) {
    moufang::Perm current = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      moufang::Perm next = current.then(g);
      if (seen.insert(next.images()).second) work.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace oracles
