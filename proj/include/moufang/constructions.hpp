#pragma once

#include <string>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/zorn.hpp"

namespace moufang {

// Canonical representatives of the {m, -m} classes of unit-determinant
// vector matrices over GF(q), in ascending field-tuple order.
std::vector<ZornMatrix> paige_class_reps(int q);

// The simple Moufang loop M(q). Materializes a Cayley table, so only
// q in {2, 3} fits under the table-order cap; q in {4, 5} throws
// TableTooLarge (use paige_class_reps for class-level work).
FiniteLoop paige_loop(int q);

// The extension M(q).2 built from invertible vector matrices modulo the
// scalar center. For even q this coincides with paige_loop(q).
FiniteLoop paige_hat(int q);

// The Chein double M(G, 2) of a finite group: order 2|G|, Moufang, and
// nonassociative exactly when G is nonabelian.
FiniteLoop chein_double(const FiniteLoop& group);

FiniteLoop cyclic_group(int n);
FiniteLoop dihedral_group(int n);       // order 2n
FiniteLoop quaternion_group8();
FiniteLoop symmetric_group(int n);      // n <= 5
FiniteLoop alternating_group(int n);    // n <= 5
FiniteLoop psl2(int q);                 // q in {2, 3, 4, 5}

// Looks up a group by its catalog name: "cyclicN", "dihedralN",
// "quaternion8", "symmetricN", "alternatingN", "psl2qQ".
FiniteLoop stock_group(const std::string& name);

}  // namespace moufang
