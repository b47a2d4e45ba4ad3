#include "moufang/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "moufang/errors.hpp"
#include "moufang/gf.hpp"

namespace moufang {

namespace {

constexpr std::int64_t kCap = static_cast<std::int64_t>(kMaxTableOrder);

// Field-tuple encoding of a vector matrix: digits (a, v0, v1, v2, w0, w1,
// w2, b) base q, with a most significant, so numeric order equals the
// lexicographic order used by ZornMatrix::operator<=>.
std::int64_t zorn_encode(int q, const ZornMatrix& m) {
  std::int64_t e = m.a;
  for (int i = 0; i < 3; ++i) e = e * q + m.v[i];
  for (int i = 0; i < 3; ++i) e = e * q + m.w[i];
  return e * q + m.b;
}

ZornMatrix zorn_decode(int q, std::int64_t e) {
  ZornMatrix m{};
  m.b = static_cast<int>(e % q);
  e /= q;
  for (int i = 2; i >= 0; --i) {
    m.w[i] = static_cast<int>(e % q);
    e /= q;
  }
  for (int i = 2; i >= 0; --i) {
    m.v[i] = static_cast<int>(e % q);
    e /= q;
  }
  m.a = static_cast<int>(e % q);
  return m;
}

std::int64_t pow8(int q) {
  std::int64_t e = 1;
  for (int i = 0; i < 8; ++i) e *= q;
  return e;
}

void require_paige_field(int q) {
  if (q != 2 && q != 3 && q != 4 && q != 5) {
    fail(ErrorCode::UnsupportedFieldSize,
         "vector-matrix builders accept q in {2, 3, 4, 5}, got " +
             std::to_string(q));
  }
}

std::int64_t paige_order_formula(int q) {
  std::int64_t q3 = static_cast<std::int64_t>(q) * q * q;
  std::int64_t q4 = q3 * q;
  int d = (q % 2 == 0) ? 1 : 2;
  return q3 * (q4 - 1) / d;
}

// Lexicographically least scalar multiple of m over the nonzero scalars.
ZornMatrix scalar_class_rep(const GaloisField& f, const ZornMatrix& m) {
  ZornMatrix best = m;
  for (int lam = 2; lam < f.q(); ++lam) {
    ZornMatrix cand = zorn_scale(f, lam, m);
    if (cand < best) best = cand;
  }
  return best;
}

FiniteLoop build_paige(int q) {
  const GaloisField& f = GaloisField::get(q);
  std::vector<ZornMatrix> reps = paige_class_reps(q);
  std::int64_t n = static_cast<std::int64_t>(reps.size());
  if (n > kCap) {
    fail(ErrorCode::TableTooLarge,
         "M(" + std::to_string(q) + ") has order " + std::to_string(n) +
             "; work with paige_class_reps instead");
  }
  std::vector<Idx> lookup(pow8(q), -1);
  for (std::int64_t i = 0; i < n; ++i) {
    lookup[zorn_encode(q, reps[i])] = static_cast<Idx>(i);
  }
  bool odd = (q % 2 != 0);
  std::vector<Idx> table(n * n);
  std::vector<std::string> labels(n);
  for (std::int64_t i = 0; i < n; ++i) labels[i] = zorn_label(reps[i]);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      ZornMatrix z = zorn_multiply(f, reps[i], reps[j]);
      if (odd) {
        ZornMatrix neg = zorn_negate(f, z);
        if (neg < z) z = neg;
      }
      Idx k = lookup[zorn_encode(q, z)];
      if (k < 0) fail(ErrorCode::InternalError, "product left the class set");
      table[i * n + j] = k;
    }
  }
  FiniteLoop loop = FiniteLoop::from_flat_table(
      table, static_cast<Idx>(n), "M(" + std::to_string(q) + ")", labels);
  if (!is_moufang(loop) || is_associative(loop)) {
    fail(ErrorCode::InternalError, "paige table failed its identity checks");
  }
  return loop;
}

FiniteLoop build_paige_hat_odd(int q) {
  const GaloisField& f = GaloisField::get(q);
  std::int64_t total = pow8(q);
  std::vector<ZornMatrix> reps;
  for (std::int64_t e = 0; e < total; ++e) {
    ZornMatrix m = zorn_decode(q, e);
    if (zorn_det(f, m) == 0) continue;
    if (scalar_class_rep(f, m) == m) reps.push_back(m);
  }
  std::int64_t n = static_cast<std::int64_t>(reps.size());
  if (n != 2 * paige_order_formula(q)) {
    fail(ErrorCode::InternalError, "unexpected scalar class count");
  }
  if (n > kCap) {
    fail(ErrorCode::TableTooLarge,
         "the order-" + std::to_string(n) + " extension exceeds the cap");
  }
  std::vector<Idx> lookup(total, -1);
  for (std::int64_t i = 0; i < n; ++i) {
    lookup[zorn_encode(q, reps[i])] = static_cast<Idx>(i);
  }
  std::vector<Idx> table(n * n);
  std::vector<std::string> labels(n);
  for (std::int64_t i = 0; i < n; ++i) labels[i] = zorn_label(reps[i]);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      ZornMatrix z =
          scalar_class_rep(f, zorn_multiply(f, reps[i], reps[j]));
      Idx k = lookup[zorn_encode(q, z)];
      if (k < 0) fail(ErrorCode::InternalError, "product left the class set");
      table[i * n + j] = k;
    }
  }
  FiniteLoop loop = FiniteLoop::from_flat_table(
      table, static_cast<Idx>(n), "Mhat(" + std::to_string(q) + ")", labels);
  if (!is_moufang(loop)) {
    fail(ErrorCode::InternalError, "extension table is not Moufang");
  }
  // The classes whose determinant is a nonzero square form the kernel of
  // the determinant-class map; it must be normal of index 2.
  std::vector<bool> is_square(q, false);
  for (int x = 1; x < q; ++x) is_square[f.mul(x, x)] = true;
  std::map<std::string, Idx> by_label;
  for (Idx i = 0; i < loop.order(); ++i) by_label[loop.label(i)] = i;
  std::vector<Idx> kernel;
  for (std::int64_t i = 0; i < n; ++i) {
    if (is_square[zorn_det(f, reps[i])]) {
      kernel.push_back(by_label.at(labels[i]));
    }
  }
  Subloop sub(loop, kernel);
  if (2 * static_cast<std::int64_t>(sub.size()) != n || !is_normal(loop, sub)) {
    fail(ErrorCode::InternalError, "square-determinant kernel is broken");
  }
  return loop;
}

const FiniteLoop& memoized(int q, bool hat) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, FiniteLoop> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, hat);
  auto it = cache.find(key);
  if (it == cache.end()) {
    FiniteLoop built = hat ? build_paige_hat_odd(q) : build_paige(q);
    it = cache.emplace(key, std::move(built)).first;
  }
  return it->second;
}

int parse_suffix(const std::string& name, std::size_t prefix_len) {
  const char* first = name.data() + prefix_len;
  const char* last = name.data() + name.size();
  if (first == last) return -1;
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) return -1;
  return value;
}

}  // namespace

std::vector<ZornMatrix> paige_class_reps(int q) {
  require_paige_field(q);
  const GaloisField& f = GaloisField::get(q);
  bool odd = (q % 2 != 0);
  std::vector<ZornMatrix> reps;
  std::int64_t total = pow8(q);
  for (std::int64_t e = 0; e < total; ++e) {
    ZornMatrix m = zorn_decode(q, e);
    if (zorn_det(f, m) != 1) continue;
    if (odd) {
      ZornMatrix neg = zorn_negate(f, m);
      if (neg < m) continue;
    }
    reps.push_back(m);
  }
  if (static_cast<std::int64_t>(reps.size()) != paige_order_formula(q)) {
    fail(ErrorCode::InternalError, "unexpected unit class count");
  }
  return reps;
}

FiniteLoop paige_loop(int q) {
  require_paige_field(q);
  if (paige_order_formula(q) > kCap) {
    fail(ErrorCode::TableTooLarge,
         "M(" + std::to_string(q) + ") has order " +
             std::to_string(paige_order_formula(q)) +
             "; work with paige_class_reps instead");
  }
  return memoized(q, false);
}

FiniteLoop paige_hat(int q) {
  require_paige_field(q);
  if (q % 2 == 0) return memoized(q, false);
  if (2 * paige_order_formula(q) > kCap) {
    fail(ErrorCode::TableTooLarge,
         "the order-" + std::to_string(2 * paige_order_formula(q)) +
             " extension exceeds the cap");
  }
  return memoized(q, true);
}

FiniteLoop chein_double(const FiniteLoop& group) {
  if (!is_associative(group)) {
    fail(ErrorCode::NotAGroup, "chein_double needs an associative input");
  }
  std::int64_t n = group.order();
  if (2 * n > kCap) {
    fail(ErrorCode::TableTooLarge, "doubled order exceeds the cap");
  }
  std::int64_t m = 2 * n;
  std::vector<Idx> table(m * m);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      Idx gi = static_cast<Idx>(i);
      Idx gj = static_cast<Idx>(j);
      table[i * m + j] = group.mul(gi, gj);
      table[i * m + (n + j)] = static_cast<Idx>(n + group.mul(gj, gi));
      table[(n + i) * m + j] =
          static_cast<Idx>(n + group.mul(gi, group.inverse(gj)));
      table[(n + i) * m + (n + j)] = group.mul(group.inverse(gj), gi);
    }
  }
  std::vector<std::string> labels(m);
  for (std::int64_t i = 0; i < n; ++i) {
    labels[i] = group.label(static_cast<Idx>(i));
    labels[n + i] = group.label(static_cast<Idx>(i)) + "u";
  }
  FiniteLoop result = FiniteLoop::from_flat_table(
      table, static_cast<Idx>(m), "M(" + group.name() + ",2)", labels);
  if (!is_moufang(result)) {
    fail(ErrorCode::InternalError, "doubled table is not Moufang");
  }
  if (is_associative(result) != is_commutative(group)) {
    fail(ErrorCode::InternalError, "doubled table broke the Chein criterion");
  }
  return result;
}

FiniteLoop cyclic_group(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "cyclic order must be >= 1");
  if (n > kCap) {
    fail(ErrorCode::TableTooLarge, "cyclic order exceeds the cap");
  }
  std::vector<Idx> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<Idx>((i + j) % n);
    }
  }
  return FiniteLoop::from_flat_table(table, n, "Z" + std::to_string(n), {});
}

FiniteLoop dihedral_group(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "dihedral degree must be >= 1");
  if (2 * n > kCap) {
    fail(ErrorCode::TableTooLarge, "dihedral order exceeds the cap");
  }
  int m = 2 * n;
  std::vector<Idx> table(static_cast<std::size_t>(m) * m);
  auto at = [&](int i, int j) -> Idx& {
    return table[static_cast<std::size_t>(i) * m + j];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      at(i, j) = static_cast<Idx>((i + j) % n);
      at(i, n + j) = static_cast<Idx>(n + ((j - i) % n + n) % n);
      at(n + i, j) = static_cast<Idx>(n + (i + j) % n);
      at(n + i, n + j) = static_cast<Idx>(((j - i) % n + n) % n);
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i) {
    labels[i] = "r" + std::to_string(i);
    labels[n + i] = "sr" + std::to_string(i);
  }
  return FiniteLoop::from_flat_table(table, m, "D" + std::to_string(n),
                                     labels);
}

FiniteLoop quaternion_group8() {
  // Elements are sign/axis pairs: index = 2*axis + sign, axes 1, i, j, k.
  auto axis_mul = [](int x, int y, int& sign) -> int {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x == y) {
      sign ^= 1;
      return 0;
    }
    static const int next[4] = {0, 2, 3, 1};
    if (next[x] == y) return 6 - x - y;
    sign ^= 1;
    return 6 - x - y;
  };
  std::vector<Idx> table(64);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      int sign = (i & 1) ^ (j & 1);
      int axis = axis_mul(i >> 1, j >> 1, sign);
      table[static_cast<std::size_t>(i) * 8 + j] =
          static_cast<Idx>(2 * axis + sign);
    }
  }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteLoop::from_flat_table(table, 8, "Q8", labels);
}

namespace {

FiniteLoop perm_table_group(int n, bool even_only, const std::string& name) {
  if (n < 1 || n > 5) {
    fail(ErrorCode::InvalidParameter, "degree must lie in [1, 5]");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (cur[i] > cur[j]) ++inversions;
        }
      }
      if (inversions % 2 != 0) continue;
    }
    perms.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  std::int64_t m = static_cast<std::int64_t>(perms.size());
  std::map<std::vector<int>, Idx> index;
  for (std::int64_t i = 0; i < m; ++i) {
    index[perms[i]] = static_cast<Idx>(i);
  }
  std::vector<Idx> table(m * m);
  std::vector<int> comp(n);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = perms[j][perms[i][x]];
      table[i * m + j] = index.at(comp);
    }
  }
  std::vector<std::string> labels(m);
  for (std::int64_t i = 0; i < m; ++i) {
    std::string s;
    for (int x : perms[i]) s += static_cast<char>('0' + x);
    labels[i] = s;
  }
  return FiniteLoop::from_flat_table(table, static_cast<Idx>(m), name, labels);
}

}  // namespace

FiniteLoop symmetric_group(int n) {
  return perm_table_group(n, false, "S" + std::to_string(n));
}

FiniteLoop alternating_group(int n) {
  return perm_table_group(n, true, "A" + std::to_string(n));
}

FiniteLoop psl2(int q) {
  if (q != 2 && q != 3 && q != 4 && q != 5) {
    fail(ErrorCode::UnsupportedFieldSize,
         "psl2 accepts q in {2, 3, 4, 5}, got " + std::to_string(q));
  }
  const GaloisField& f = GaloisField::get(q);
  int npts = q + 1;  // projective line, with index q as the infinite point
  std::map<std::vector<int>, Idx> index;
  std::vector<std::vector<int>> perms;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        for (int d = 0; d < q; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) continue;
          std::vector<int> img(npts);
          for (int x = 0; x < q; ++x) {
            int den = f.add(f.mul(c, x), d);
            img[x] = (den == 0) ? q : f.div(f.add(f.mul(a, x), b), den);
          }
          img[q] = (c == 0) ? q : f.div(a, c);
          if (index.emplace(img, 0).second) perms.push_back(img);
        }
      }
    }
  }
  std::sort(perms.begin(), perms.end());
  std::int64_t m = static_cast<std::int64_t>(perms.size());
  for (std::int64_t i = 0; i < m; ++i) {
    index[perms[i]] = static_cast<Idx>(i);
  }
  static const std::map<int, std::int64_t> expected = {
      {2, 6}, {3, 12}, {4, 60}, {5, 60}};
  if (m != expected.at(q)) {
    fail(ErrorCode::InternalError, "unexpected projective group size");
  }
  std::vector<Idx> table(m * m);
  std::vector<int> comp(npts);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      for (int x = 0; x < npts; ++x) comp[x] = perms[j][perms[i][x]];
      auto it = index.find(comp);
      if (it == index.end()) {
        fail(ErrorCode::InternalError, "projective maps are not closed");
      }
      table[i * m + j] = it->second;
    }
  }
  std::vector<std::string> labels(m);
  for (std::int64_t i = 0; i < m; ++i) {
    std::string s;
    for (int x : perms[i]) {
      s += (x == q) ? '*' : static_cast<char>('0' + x);
    }
    labels[i] = s;
  }
  return FiniteLoop::from_flat_table(table, static_cast<Idx>(m),
                                     "PSL2(" + std::to_string(q) + ")",
                                     labels);
}

FiniteLoop stock_group(const std::string& name) {
  if (name == "quaternion8") return quaternion_group8();
  auto has_prefix = [&](const char* p) {
    return name.rfind(p, 0) == 0;
  };
  if (has_prefix("cyclic")) {
    int n = parse_suffix(name, 6);
    if (n < 0) fail(ErrorCode::UnknownName, "bad group name: " + name);
    return cyclic_group(n);
  }
  if (has_prefix("dihedral")) {
    int n = parse_suffix(name, 8);
    if (n < 0) fail(ErrorCode::UnknownName, "bad group name: " + name);
    return dihedral_group(n);
  }
  if (has_prefix("symmetric")) {
    int n = parse_suffix(name, 9);
    if (n < 0) fail(ErrorCode::UnknownName, "bad group name: " + name);
    return symmetric_group(n);
  }
  if (has_prefix("alternating")) {
    int n = parse_suffix(name, 11);
    if (n < 0) fail(ErrorCode::UnknownName, "bad group name: " + name);
    return alternating_group(n);
  }
  if (has_prefix("psl2q")) {
    int q = parse_suffix(name, 5);
    if (q < 0) fail(ErrorCode::UnknownName, "bad group name: " + name);
    return psl2(q);
  }
  fail(ErrorCode::UnknownName, "unknown group name: " + name);
}

}  // namespace moufang
