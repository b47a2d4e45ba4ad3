#include "moufang/s3module.hpp"

#include "moufang/errors.hpp"

namespace moufang {

namespace {

using Mat = std::vector<std::vector<int>>;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Mat mod_reduce(Mat m, int p) {
  for (auto& row : m) {
    for (int& v : row) v = (v % p + p) % p;
  }
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int p) {
  int d = static_cast<int>(a.size());
  Mat out(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < d; ++j) {
        out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
      }
    }
  }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b, int p) {
  int d = static_cast<int>(a.size());
  Mat out(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out[i][j] = (a[i][j] + b[i][j]) % p;
  }
  return out;
}

Mat mat_identity(int d) {
  Mat out(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) out[i][i] = 1;
  return out;
}

bool mat_is_identity(const Mat& a) {
  int d = static_cast<int>(a.size());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a) {
    for (int v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

struct RowDef {
  int chi;
  int index;
  int dim;
  Mat sigma;
  Mat rho;
  bool expected;
};

const std::vector<RowDef>& catalog() {
  static const std::vector<RowDef> rows = {
      {0, 1, 1, {{1}}, {{1}}, true},
      {0, 2, 1, {{-1}}, {{1}}, false},
      {0, 3, 2, {{0, 1}, {1, 0}}, {{0, 1}, {-1, -1}}, true},
      {2, 1, 1, {{1}}, {{1}}, true},
      {2, 2, 2, {{0, 1}, {1, 0}}, {{0, 1}, {1, 1}}, true},
      // The nonsplit self-extension of the trivial module: the 3-cycle
      // acts trivially and the transposition swaps the basis.
      {2, 3, 2, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}, false},
      {3, 1, 1, {{1}}, {{1}}, true},
      {3, 2, 1, {{-1}}, {{1}}, true},
      {3, 3, 2, {{1, 0}, {0, -1}}, {{1, 1}, {0, 1}}, true},
      {3, 4, 2, {{-1, 0}, {0, 1}}, {{1, 1}, {0, 1}}, true},
      {3, 5, 3,
       {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}},
       {{1, 1, 1}, {0, 1, -1}, {0, 0, 1}},
       true},
      {3, 6, 3,
       {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
       {{1, -1, 1}, {0, 1, 1}, {0, 0, 1}},
       false},
  };
  return rows;
}

const RowDef& find_row(int chi, int index) {
  for (const auto& row : catalog()) {
    if (row.chi == chi && row.index == index) return row;
  }
  fail(ErrorCode::UnknownRow,
       "no module row (" + std::to_string(chi) + ", " + std::to_string(index) +
           ")");
}

}  // namespace

S3Module table1_module(int chi, int index, int surrogate_prime) {
  const RowDef& row = find_row(chi, index);
  int p = (chi == 0) ? surrogate_prime : chi;
  if (chi == 0 && (!is_prime(p) || p == 2 || p == 3)) {
    fail(ErrorCode::InvalidParameter,
         "surrogate characteristic must be a prime other than 2 and 3");
  }
  S3Module v;
  v.name = "V" + std::to_string(index) + "(" + std::to_string(chi) + ")";
  v.characteristic = p;
  v.dim = row.dim;
  v.mat_sigma = mod_reduce(row.sigma, p);
  v.mat_rho = mod_reduce(row.rho, p);
  return v;
}

std::vector<std::pair<int, int>> table1_rows() {
  std::vector<std::pair<int, int>> out;
  for (const auto& row : catalog()) out.emplace_back(row.chi, row.index);
  return out;
}

bool table1_expected(int chi, int index) { return find_row(chi, index).expected; }

bool s3_relations_hold(const S3Module& v) {
  int p = v.characteristic;
  if (!is_prime(p)) {
    fail(ErrorCode::InvalidParameter, "module characteristic must be prime");
  }
  const Mat& s = v.mat_sigma;
  const Mat& r = v.mat_rho;
  if (static_cast<int>(s.size()) != v.dim ||
      static_cast<int>(r.size()) != v.dim) {
    fail(ErrorCode::InvalidParameter, "matrix size does not match dim");
  }
  if (!mat_is_identity(mat_mul(s, s, p))) return false;
  Mat r2 = mat_mul(r, r, p);
  if (!mat_is_identity(mat_mul(r2, r, p))) return false;
  Mat rs = mat_mul(r, s, p);
  return mat_is_identity(mat_mul(rs, rs, p));
}

bool is_triality_module(const S3Module& v) {
  if (!s3_relations_hold(v)) {
    fail(ErrorCode::RelationsViolated,
         "module maps do not satisfy the S3 relations");
  }
  int p = v.characteristic;
  Mat identity = mat_identity(v.dim);
  Mat r2 = mat_mul(v.mat_rho, v.mat_rho, p);
  Mat sum = mat_add(mat_add(identity, v.mat_rho, p), r2, p);
  Mat sigma_minus = v.mat_sigma;
  for (int i = 0; i < v.dim; ++i) {
    sigma_minus[i][i] = ((sigma_minus[i][i] - 1) % p + p) % p;
  }
  return mat_is_zero(mat_mul(sigma_minus, sum, p));
}

TrialityGroup as_triality_group(const S3Module& v) {
  if (!is_triality_module(v)) {
    fail(ErrorCode::NotTriality,
         v.name.empty() ? "module is not a triality module"
                        : v.name + " is not a triality module");
  }
  return TrialityGroup::from_vectors(v.characteristic, v.dim, v.mat_sigma,
                                     v.mat_rho,
                                     v.name.empty() ? "module" : v.name);
}

}  // namespace moufang
