#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

enum class FactorClass { CyclicPrime, SimpleGroup, Paige };

// One isomorphism type of composition factor. p is set for CyclicPrime
// factors, q for Paige factors, name for recognized simple groups.
struct FactorKind {
  FactorClass kind;
  std::int64_t order = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string name;
};

// Equality ignores the display name.
bool operator==(const FactorKind& a, const FactorKind& b);
inline bool operator!=(const FactorKind& a, const FactorKind& b) {
  return !(a == b);
}

FactorKind cyclic_prime_factor(std::int64_t p);
FactorKind paige_factor(std::int64_t q);
FactorKind simple_group_factor(std::int64_t order);

// Short display form: "Z2", "Paige(3)", "A5", "Simple(360)".
std::string factor_name(const FactorKind& kind);

// Order of the Paige loop built over the field with q elements:
// q^3 (q^4 - 1) / gcd(2, q - 1).
std::int64_t paige_order(std::int64_t q);

// One link of a chief series together with the decomposition of its factor
// into composition factors. The factor loop N_i / N_{i-1} is kept as a
// standalone loop; decomposition lists (kind, multiplicity) pairs whose
// order product equals the factor order.
struct ChiefStep {
  std::int64_t lower_order;
  std::int64_t upper_order;
  FiniteLoop factor;
  std::vector<std::pair<FactorKind, int>> decomposition;
};

// Ascending chief chain 1 = N_0 < N_1 < ... < N_k = L with one ChiefStep per
// link. The chain subloops reference the analyzed loop, which must outlive
// this object.
struct CompositionData {
  std::vector<Subloop> chain;
  std::vector<ChiefStep> steps;

  // All composition factors aggregated across steps, deterministically
  // ordered with multiplicities merged.
  std::vector<std::pair<FactorKind, int>> factors() const;
};

// Chief series by iterated minimal normal subloops of successive quotients;
// at each stage the smallest minimal normal subloop is chosen, with
// lexicographic tiebreak on element lists. Each chief factor is decomposed
// into composition factors: elementary abelian of order p^k gives k copies
// of CyclicPrime(p), a nonassociative factor is recognized as a Paige loop
// through its order, and a nonabelian associative factor splits into
// isomorphic simple groups through its own minimal normal subloops.
CompositionData chief_decomposition(const FiniteLoop& loop);

// Sylow verdict for one prime: p fails exactly when some Paige composition
// factor with parameter q has p dividing (q^2 + 1) / gcd(2, q - 1); the
// offending parameters are listed as witnesses.
struct SylowVerdict {
  std::int64_t p = 0;
  bool sylow = false;
  std::vector<std::int64_t> witnesses;
};

SylowVerdict sylow_verdict(const FiniteLoop& loop, std::int64_t p);

// Verdicts for every prime dividing the loop order, ascending.
std::vector<SylowVerdict> sylow_primes(const FiniteLoop& loop);

// A subloop of order p^k where p^k is the largest power of p dividing the
// loop order. Backtracking search over subloops of p-power order: each
// state is extended by the least-index element of p-power order that keeps
// the generated subloop a p-loop, with visited states memoized. Throws
// NotSylowPrime when the verdict for p is negative.
Subloop find_p_sylow(const FiniteLoop& loop, std::int64_t p);

// Product over composition factors of the p-Sylow order of each factor,
// counting 1 for Paige factors whose parameter obstructs p.
std::int64_t quasi_sylow_order(const FiniteLoop& loop, std::int64_t p);

// A subloop of order quasi_sylow_order(loop, p), found as a p-Sylow subloop
// of gr_p(loop).
Subloop find_quasi_p_sylow(const FiniteLoop& loop, std::int64_t p);

// True when no composition factor is a Paige loop.
bool is_group_type(const FiniteLoop& loop);

// Largest normal subloop all of whose composition factors are groups: the
// join of the single-element normal closures that are of group type. The
// result is verified normal, of group type, and with a trivial radical in
// the quotient.
Subloop group_type_radical(const FiniteLoop& loop);

// Join of the single-element normal closures for which p is a Sylow prime.
// Verified normal, with p a Sylow prime for it, and with no element of
// order divisible by p in the quotient.
Subloop gr_p(const FiniteLoop& loop, std::int64_t p);

// Socle analysis for loops with trivial group-type radical: the socle is
// the join of the minimal normal subloops, each of which must be a simple
// Paige loop, and the quotient by the socle must be an elementary abelian
// 2-group. Throws RadicalNotTrivial otherwise.
struct SocleReport {
  Subloop socle;
  std::vector<Subloop> minimal_normals;
  std::vector<FactorKind> factors;
  FiniteLoop quotient;
  bool quotient_elementary_abelian_2 = false;
  bool ok = false;
  std::string note;
};

SocleReport socle_check(const FiniteLoop& loop);

// Every subloop, found by closing each discovered subloop with each outside
// element; sorted by size then lexicographically. Throws
// ClosureBudgetExceeded if the count passes the global budget.
std::vector<Subloop> enumerate_subloops(const FiniteLoop& loop);

// Every subloop of p-power order, by the same search restricted to
// generators of p-power order and closures capped at the p-part of the
// loop order.
std::vector<Subloop> enumerate_p_subloops(const FiniteLoop& loop,
                                          std::int64_t p);

}  // namespace moufang
