#pragma once

#include <vector>

#include "moufang/loop.hpp"
#include "moufang/perm.hpp"

namespace moufang {

// Bijection with companion, written (A, a); the pair belongs to PsAut(M)
// when xA * (yA * a) = (xy)A * a for all x, y.
struct PseudoautPair {
  Perm map;
  Idx companion = 0;
};

bool is_pseudoautomorphism(const FiniteLoop& loop, const Perm& map,
                           Idx companion);

PseudoautPair psaut_identity(const FiniteLoop& loop);

// Group law (A, a)(B, b) = (AB, aB * b); postfix map composition.
PseudoautPair psaut_compose(const PseudoautPair& p1, const PseudoautPair& p2,
                            const FiniteLoop& loop);

PseudoautPair psaut_inverse(const PseudoautPair& p, const FiniteLoop& loop);

// The inner pair (T_x, x^-3).
PseudoautPair inner_psaut(const FiniteLoop& loop, Idx x);

struct PsInnResult {
  std::vector<PseudoautPair> elements;
  std::size_t generator_count = 0;
};

// Closure of the inner pairs under composition. Throws
// ClosureBudgetExceeded once the stored-pair budget is exhausted.
PsInnResult psinn_group(const FiniteLoop& loop);

}  // namespace moufang
