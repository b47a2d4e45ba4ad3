#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moufang/triality.hpp"

namespace moufang {

// Matrix action of the two S3 generators on Z_p^dim, row-vector convention.
// mat_sigma is the image of the transposition, mat_rho of the 3-cycle.
struct S3Module {
  std::string name;
  int characteristic = 0;
  int dim = 0;
  std::vector<std::vector<int>> mat_sigma;
  std::vector<std::vector<int>> mat_rho;
};

// The catalog of indecomposable S3-modules, addressed by the block
// characteristic (0, 2, or 3) and the row index within the block.
// Characteristic-0 rows are realized mod a surrogate prime not in {2, 3}.
S3Module table1_module(int chi, int index, int surrogate_prime = 7);

// All valid (chi, index) addresses in display order.
std::vector<std::pair<int, int>> table1_rows();

// Catalog verdict: whether the row is expected to be a triality module.
bool table1_expected(int chi, int index);

bool s3_relations_hold(const S3Module& v);

// True iff (mat_sigma - I)(I + mat_rho + mat_rho^2) vanishes mod the
// characteristic. Throws RelationsViolated when the S3 relations fail.
bool is_triality_module(const S3Module& v);

// Wraps the module as a vector carrier; throws NotTriality when
// is_triality_module is false.
TrialityGroup as_triality_group(const S3Module& v);

}  // namespace moufang
