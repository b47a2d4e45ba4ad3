#include "moufang/triality.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "moufang/errors.hpp"

namespace moufang {

namespace detail {

class TrialityCarrier {
 public:
  virtual ~TrialityCarrier() = default;
  virtual TrialityGroup::CarrierKind kind() const = 0;
  virtual std::int64_t size() const = 0;
  virtual std::int64_t mul(std::int64_t x, std::int64_t y) const = 0;
  virtual std::int64_t inverse(std::int64_t x) const = 0;
  virtual std::int64_t sigma(std::int64_t x) const = 0;
  virtual std::int64_t rho(std::int64_t x) const = 0;
  virtual std::string label(std::int64_t x) const = 0;
  // True when sigma and rho are automorphisms; on failure may set a witness.
  virtual bool automorphisms_ok(std::optional<std::int64_t>& witness) const = 0;
  virtual bool relations_ok() const = 0;

  const std::string& name() const { return name_; }

 protected:
  explicit TrialityCarrier(std::string name) : name_(std::move(name)) {}
  std::string name_;
};

namespace {

class CayleyCarrier final : public TrialityCarrier {
 public:
  CayleyCarrier(FiniteLoop group, Perm sigma, Perm rho, std::string name)
      : TrialityCarrier(std::move(name)),
        group_(std::move(group)),
        sigma_(std::move(sigma)),
        rho_(std::move(rho)) {}

  TrialityGroup::CarrierKind kind() const override {
    return TrialityGroup::CarrierKind::Cayley;
  }
  std::int64_t size() const override { return group_.order(); }
  std::int64_t mul(std::int64_t x, std::int64_t y) const override {
    return group_.mul(static_cast<Idx>(x), static_cast<Idx>(y));
  }
  std::int64_t inverse(std::int64_t x) const override {
    return group_.inverse(static_cast<Idx>(x));
  }
  std::int64_t sigma(std::int64_t x) const override {
    return sigma_.apply(static_cast<Idx>(x));
  }
  std::int64_t rho(std::int64_t x) const override {
    return rho_.apply(static_cast<Idx>(x));
  }
  std::string label(std::int64_t x) const override {
    return group_.label(static_cast<Idx>(x));
  }

  bool automorphisms_ok(std::optional<std::int64_t>& witness) const override {
    Idx n = group_.order();
    for (Idx x = 0; x < n; ++x) {
      const Idx* row = group_.row(x);
      Idx sx = sigma_.apply(x);
      Idx rx = rho_.apply(x);
      for (Idx y = 0; y < n; ++y) {
        if (sigma_.apply(row[y]) != group_.mul(sx, sigma_.apply(y)) ||
            rho_.apply(row[y]) != group_.mul(rx, rho_.apply(y))) {
          witness = x;
          return false;
        }
      }
    }
    return true;
  }

  bool relations_ok() const override {
    Idx n = group_.order();
    for (Idx x = 0; x < n; ++x) {
      if (sigma_.apply(sigma_.apply(x)) != x) return false;
      if (rho_.apply(rho_.apply(rho_.apply(x))) != x) return false;
      Idx once = sigma_.apply(rho_.apply(x));
      if (sigma_.apply(rho_.apply(once)) != x) return false;
    }
    return true;
  }

 private:
  FiniteLoop group_;
  Perm sigma_;
  Perm rho_;
};

class PowerCarrier final : public TrialityCarrier {
 public:
  PowerCarrier(FiniteLoop base, int exponent, std::vector<int> sigma_coords,
               std::vector<int> rho_coords, std::string name)
      : TrialityCarrier(std::move(name)),
        base_(std::move(base)),
        exp_(exponent),
        sc_(std::move(sigma_coords)),
        rc_(std::move(rho_coords)) {
    size_ = 1;
    for (int i = 0; i < exp_; ++i) size_ *= base_.order();
  }

  TrialityGroup::CarrierKind kind() const override {
    return TrialityGroup::CarrierKind::StructuredPower;
  }
  std::int64_t size() const override { return size_; }

  std::int64_t mul(std::int64_t x, std::int64_t y) const override {
    std::int64_t n = base_.order();
    std::int64_t out = 0;
    std::int64_t scale = 1;
    for (int i = 0; i < exp_; ++i) {
      Idx xi = static_cast<Idx>(x % n);
      Idx yi = static_cast<Idx>(y % n);
      out += scale * base_.mul(xi, yi);
      x /= n;
      y /= n;
      scale *= n;
    }
    return out;
  }

  std::int64_t inverse(std::int64_t x) const override {
    std::int64_t n = base_.order();
    std::int64_t out = 0;
    std::int64_t scale = 1;
    for (int i = 0; i < exp_; ++i) {
      out += scale * base_.inverse(static_cast<Idx>(x % n));
      x /= n;
      scale *= n;
    }
    return out;
  }

  std::int64_t sigma(std::int64_t x) const override { return permute(x, sc_); }
  std::int64_t rho(std::int64_t x) const override { return permute(x, rc_); }

  std::string label(std::int64_t x) const override {
    std::int64_t n = base_.order();
    std::string s = "(";
    for (int i = 0; i < exp_; ++i) {
      if (i) s += ",";
      s += base_.label(static_cast<Idx>(x % n));
      x /= n;
    }
    return s + ")";
  }

  bool automorphisms_ok(std::optional<std::int64_t>&) const override {
    // Coordinate permutations of a group power are automorphisms; the
    // arrays were validated as permutations at construction.
    return true;
  }

  bool relations_ok() const override {
    // Element maps compose through their coordinate maps: (A then B) reads
    // coordinate a[b[i]], so the relations reduce to array identities.
    for (int i = 0; i < exp_; ++i) {
      if (sc_[sc_[i]] != i) return false;
      if (rc_[rc_[rc_[i]]] != i) return false;
      int once = rc_[sc_[i]];
      if (rc_[sc_[once]] != i) return false;
    }
    return true;
  }

 private:
  std::int64_t permute(std::int64_t x, const std::vector<int>& coords) const {
    std::int64_t n = base_.order();
    std::array<std::int64_t, 4> digit{0, 0, 0, 0};
    for (int i = 0; i < exp_; ++i) {
      digit[i] = x % n;
      x /= n;
    }
    std::int64_t out = 0;
    std::int64_t scale = 1;
    for (int i = 0; i < exp_; ++i) {
      out += scale * digit[coords[i]];
      scale *= n;
    }
    return out;
  }

  FiniteLoop base_;
  int exp_;
  std::vector<int> sc_;
  std::vector<int> rc_;
  std::int64_t size_ = 0;
};

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, int p) {
  int d = static_cast<int>(a.size());
  IntMatrix out(d, std::vector<int>(d, 0));
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

bool mat_is_identity(const IntMatrix& a) {
  int d = static_cast<int>(a.size());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool mat_invertible(IntMatrix a, int p) {
  int d = static_cast<int>(a.size());
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int pivot = -1;
    for (int r = row; r < d; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[row], a[pivot]);
    for (int r = 0; r < d; ++r) {
      if (r == row || a[r][col] == 0) continue;
      // Clear a[r][col] using row `row`; scale avoids needing inverses.
      int lead = a[row][col];
      int fac = a[r][col];
      for (int j = 0; j < d; ++j) {
        a[r][j] = ((a[r][j] * lead - a[row][j] * fac) % p + p) % p;
      }
    }
    ++row;
  }
  return row == d;
}

class VectorCarrier final : public TrialityCarrier {
 public:
  VectorCarrier(int p, int dim, IntMatrix sigma_matrix, IntMatrix rho_matrix,
                std::string name)
      : TrialityCarrier(std::move(name)),
        p_(p),
        dim_(dim),
        sm_(std::move(sigma_matrix)),
        rm_(std::move(rho_matrix)) {
    size_ = 1;
    for (int i = 0; i < dim_; ++i) size_ *= p_;
  }

  TrialityGroup::CarrierKind kind() const override {
    return TrialityGroup::CarrierKind::AbelianVector;
  }
  std::int64_t size() const override { return size_; }

  std::int64_t mul(std::int64_t x, std::int64_t y) const override {
    std::int64_t out = 0;
    std::int64_t scale = 1;
    for (int i = 0; i < dim_; ++i) {
      out += scale * ((x % p_ + y % p_) % p_);
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return out;
  }

  std::int64_t inverse(std::int64_t x) const override {
    std::int64_t out = 0;
    std::int64_t scale = 1;
    for (int i = 0; i < dim_; ++i) {
      out += scale * ((p_ - x % p_) % p_);
      x /= p_;
      scale *= p_;
    }
    return out;
  }

  std::int64_t sigma(std::int64_t x) const override { return act(x, sm_); }
  std::int64_t rho(std::int64_t x) const override { return act(x, rm_); }

  std::string label(std::int64_t x) const override {
    std::string s = "(";
    for (int i = 0; i < dim_; ++i) {
      if (i) s += ",";
      s += std::to_string(x % p_);
      x /= p_;
    }
    return s + ")";
  }

  bool automorphisms_ok(std::optional<std::int64_t>&) const override {
    return mat_invertible(sm_, p_) && mat_invertible(rm_, p_);
  }

  bool relations_ok() const override {
    // Row-vector action composes left to right, so (rho then sigma) is the
    // matrix product rm * sm.
    if (!mat_is_identity(mat_mul(sm_, sm_, p_))) return false;
    IntMatrix r2 = mat_mul(rm_, rm_, p_);
    if (!mat_is_identity(mat_mul(r2, rm_, p_))) return false;
    IntMatrix rs = mat_mul(rm_, sm_, p_);
    return mat_is_identity(mat_mul(rs, rs, p_));
  }

 private:
  std::int64_t act(std::int64_t x, const IntMatrix& m) const {
    std::array<int, 4> digit{0, 0, 0, 0};
    for (int i = 0; i < dim_; ++i) {
      digit[i] = static_cast<int>(x % p_);
      x /= p_;
    }
    std::int64_t out = 0;
    std::int64_t scale = 1;
    for (int j = 0; j < dim_; ++j) {
      int acc = 0;
      for (int i = 0; i < dim_; ++i) acc = (acc + digit[i] * m[i][j]) % p_;
      out += scale * acc;
      scale *= p_;
    }
    return out;
  }

  int p_;
  int dim_;
  IntMatrix sm_;
  IntMatrix rm_;
  std::int64_t size_ = 0;
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace
}  // namespace detail

TrialityGroup::TrialityGroup(
    std::shared_ptr<const detail::TrialityCarrier> impl)
    : impl_(std::move(impl)) {}

TrialityGroup TrialityGroup::from_group(FiniteLoop group, Perm sigma, Perm rho,
                                        std::string name) {
  if (!is_associative(group)) {
    fail(ErrorCode::NotAGroup, "carrier table must be associative");
  }
  if (sigma.degree() != group.order() || rho.degree() != group.order()) {
    fail(ErrorCode::DegreeMismatch, "map degree does not match carrier order");
  }
  return TrialityGroup(std::make_shared<detail::CayleyCarrier>(
      std::move(group), std::move(sigma), std::move(rho), std::move(name)));
}

TrialityGroup TrialityGroup::from_power(const FiniteLoop& base, int exponent,
                                        std::vector<int> sigma_coords,
                                        std::vector<int> rho_coords,
                                        std::string name) {
  if (!is_associative(base)) {
    fail(ErrorCode::NotAGroup, "power base must be associative");
  }
  if (exponent < 1 || exponent > 4) {
    fail(ErrorCode::InvalidParameter, "power exponent must lie in [1, 4]");
  }
  auto check_coords = [&](const std::vector<int>& c) {
    if (static_cast<int>(c.size()) != exponent) return false;
    std::vector<bool> seen(exponent, false);
    for (int v : c) {
      if (v < 0 || v >= exponent || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  };
  if (!check_coords(sigma_coords) || !check_coords(rho_coords)) {
    fail(ErrorCode::InvalidParameter,
         "coordinate maps must be permutations of the exponent range");
  }
  std::int64_t sz = 1;
  for (int i = 0; i < exponent; ++i) sz *= base.order();
  if (sz > 5'000'000) {
    fail(ErrorCode::CarrierTooLarge,
         "power carrier of size " + std::to_string(sz) + " exceeds 5000000");
  }
  return TrialityGroup(std::make_shared<detail::PowerCarrier>(
      base, exponent, std::move(sigma_coords), std::move(rho_coords),
      std::move(name)));
}

TrialityGroup TrialityGroup::from_vectors(int p, int dim,
                                          std::vector<std::vector<int>> sm,
                                          std::vector<std::vector<int>> rm,
                                          std::string name) {
  if (!detail::is_prime(p)) {
    fail(ErrorCode::InvalidParameter, "modulus must be prime");
  }
  if (dim < 1 || dim > 4) {
    fail(ErrorCode::InvalidParameter, "dimension must lie in [1, 4]");
  }
  std::int64_t sz = 1;
  for (int i = 0; i < dim; ++i) sz *= p;
  if (sz > 5000) {
    fail(ErrorCode::CarrierTooLarge, "vector carrier exceeds 5000 elements");
  }
  auto normalize = [&](std::vector<std::vector<int>>& m) {
    if (static_cast<int>(m.size()) != dim) {
      fail(ErrorCode::InvalidParameter, "matrix must be dim x dim");
    }
    for (auto& row : m) {
      if (static_cast<int>(row.size()) != dim) {
        fail(ErrorCode::InvalidParameter, "matrix must be dim x dim");
      }
      for (int& v : row) v = (v % p + p) % p;
    }
  };
  normalize(sm);
  normalize(rm);
  return TrialityGroup(std::make_shared<detail::VectorCarrier>(
      p, dim, std::move(sm), std::move(rm), std::move(name)));
}

TrialityGroup::CarrierKind TrialityGroup::kind() const {
  return impl_->kind();
}
TrialityGroup::Elem TrialityGroup::size() const { return impl_->size(); }

namespace {

void check_range(const detail::TrialityCarrier& c, TrialityGroup::Elem x) {
  if (x < 0 || x >= c.size()) {
    fail(ErrorCode::InvalidParameter, "carrier element out of range");
  }
}

}  // namespace

TrialityGroup::Elem TrialityGroup::mul(Elem x, Elem y) const {
  check_range(*impl_, x);
  check_range(*impl_, y);
  return impl_->mul(x, y);
}
TrialityGroup::Elem TrialityGroup::inverse(Elem x) const {
  check_range(*impl_, x);
  return impl_->inverse(x);
}
TrialityGroup::Elem TrialityGroup::sigma(Elem x) const {
  check_range(*impl_, x);
  return impl_->sigma(x);
}
TrialityGroup::Elem TrialityGroup::rho(Elem x) const {
  check_range(*impl_, x);
  return impl_->rho(x);
}
std::string TrialityGroup::label(Elem x) const {
  check_range(*impl_, x);
  return impl_->label(x);
}
const std::string& TrialityGroup::name() const { return impl_->name(); }

namespace {

using Elem = TrialityGroup::Elem;

// Enumerates M = {x^-1 x^sigma} in first-found order and builds the loop
// table under m.n = m^-rho n m^-rho^2. Assumes the carrier passed the
// relation, automorphism, and identity checks.
MoufangExtraction extract_loop(const TrialityGroup& g,
                               std::int64_t coset_index) {
  std::int64_t n = g.size();
  std::unordered_map<Elem, Idx> pos;
  std::vector<Elem> emb;
  for (std::int64_t x = 0; x < n; ++x) {
    Elem m = g.mul(g.inverse(x), g.sigma(x));
    if (pos.emplace(m, static_cast<Idx>(emb.size())).second) {
      emb.push_back(m);
    }
  }
  std::int64_t k = static_cast<std::int64_t>(emb.size());
  if (k != coset_index) {
    fail(ErrorCode::TrialityViolated,
         "|M| = " + std::to_string(k) + " differs from the coset index " +
             std::to_string(coset_index));
  }
  if (k > static_cast<std::int64_t>(kMaxTableOrder)) {
    fail(ErrorCode::TableTooLarge, "extracted loop exceeds the table cap");
  }
  for (Elem m : emb) {
    if (g.sigma(m) != g.inverse(m)) {
      fail(ErrorCode::TrialityViolated, "sigma does not invert M");
    }
  }
  std::vector<Idx> table(k * k);
  std::vector<std::string> labels(k);
  for (std::int64_t i = 0; i < k; ++i) labels[i] = g.label(emb[i]);
  for (std::int64_t i = 0; i < k; ++i) {
    Elem mi_inv = g.inverse(emb[i]);
    Elem left = g.rho(mi_inv);
    Elem right = g.rho(g.rho(mi_inv));
    for (std::int64_t j = 0; j < k; ++j) {
      Elem prod = g.mul(g.mul(left, emb[j]), right);
      auto it = pos.find(prod);
      if (it == pos.end()) {
        fail(ErrorCode::TrialityViolated, "loop product left M");
      }
      table[i * k + j] = it->second;
    }
  }
  FiniteLoop loop = FiniteLoop::from_flat_table(
      table, static_cast<Idx>(k), "M(" + g.name() + ")", labels);
  if (!is_moufang(loop)) {
    fail(ErrorCode::TrialityViolated, "extracted table is not Moufang");
  }
  return MoufangExtraction{std::move(loop), std::move(emb)};
}

std::vector<Elem> close_subgroup(const TrialityGroup& g,
                                 const std::vector<Elem>& gens) {
  std::size_t budget = default_budget();
  std::unordered_set<Elem> seen;
  std::deque<Elem> work;
  seen.insert(0);
  work.push_back(0);
  while (!work.empty()) {
    Elem cur = work.front();
    work.pop_front();
    for (Elem gen : gens) {
      Elem next = g.mul(cur, gen);
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          fail(ErrorCode::ClosureBudgetExceeded,
               "subgroup closure exceeded " + std::to_string(budget) +
                   " elements");
        }
        work.push_back(next);
      }
    }
  }
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_materializable(const TrialityGroup& g) {
  if (g.kind() != TrialityGroup::CarrierKind::Cayley && g.size() > 5000) {
    fail(ErrorCode::CarrierTooLarge,
         "operation needs a carrier of at most 5000 elements");
  }
}

}  // namespace

TrialityReport verify_triality(const TrialityGroup& g) {
  TrialityReport report;
  std::optional<Elem> witness;
  report.automorphism_ok = g.impl_->automorphisms_ok(witness);
  report.relations_ok = g.impl_->relations_ok();

  std::int64_t n = g.size();
  std::int64_t fixed = 0;
  for (std::int64_t x = 0; x < n; ++x) {
    if (g.sigma(x) == x) ++fixed;
  }
  report.coset_index = (fixed > 0) ? n / fixed : 0;

  report.identity_ok = true;
  for (std::int64_t x = 0; x < n; ++x) {
    Elem m = g.mul(g.inverse(x), g.sigma(x));
    Elem m1 = g.rho(m);
    Elem m2 = g.rho(m1);
    if (g.mul(g.mul(m, m1), m2) != 0) {
      report.identity_ok = false;
      if (!witness) witness = x;
      break;
    }
  }
  report.violating = witness;

  if (report.ok()) {
    MoufangExtraction ext = extract_loop(g, report.coset_index);
    report.loop = std::move(ext.loop);
    report.embedding = std::move(ext.embedding);
  }
  return report;
}

MoufangExtraction moufang_from_triality(const TrialityGroup& g) {
  TrialityReport report = verify_triality(g);
  if (!report.ok()) {
    std::string what = "carrier is not a triality group:";
    if (!report.automorphism_ok) what += " maps are not automorphisms;";
    if (!report.relations_ok) what += " S3 relations fail;";
    if (!report.identity_ok) what += " triality identity fails;";
    if (report.violating) {
      what += " witness element " + std::to_string(*report.violating);
    }
    fail(ErrorCode::TrialityViolated, what);
  }
  return MoufangExtraction{std::move(*report.loop),
                           std::move(report.embedding)};
}

std::vector<TrialityGroup::Elem> s_subgroup_closure(
    const TrialityGroup& g, const std::vector<TrialityGroup::Elem>& p) {
  MoufangExtraction ext = moufang_from_triality(g);
  std::unordered_map<Elem, Idx> pos;
  for (std::size_t i = 0; i < ext.embedding.size(); ++i) {
    pos.emplace(ext.embedding[i], static_cast<Idx>(i));
  }
  std::vector<Elem> gens;
  std::vector<Idx> loop_gens;
  for (Elem e : p) {
    auto it = pos.find(e);
    if (it == pos.end()) {
      fail(ErrorCode::InvalidParameter,
           "element " + std::to_string(e) + " is not in M");
    }
    loop_gens.push_back(it->second);
    gens.push_back(e);
    gens.push_back(g.rho(e));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Elem> closure = close_subgroup(g, gens);

  std::unordered_set<Elem> in_closure(closure.begin(), closure.end());
  for (Elem q : closure) {
    if (!in_closure.count(g.sigma(q)) || !in_closure.count(g.rho(q))) {
      fail(ErrorCode::InternalError, "closure is not S-invariant");
    }
  }
  // M of the closure must be exactly the subloop generated by P.
  std::unordered_set<Elem> m_of_q;
  for (Elem q : closure) {
    m_of_q.insert(g.mul(g.inverse(q), g.sigma(q)));
  }
  Subloop span = generated_subloop(ext.loop, loop_gens);
  if (m_of_q.size() != span.elements().size()) {
    fail(ErrorCode::InternalError, "closure does not match the spanned loop");
  }
  for (Idx s : span.elements()) {
    if (!m_of_q.count(ext.embedding[static_cast<std::size_t>(s)])) {
      fail(ErrorCode::InternalError, "closure does not match the spanned loop");
    }
  }
  return closure;
}

std::vector<TrialityGroup::Elem> commutator_with_s(const TrialityGroup& g) {
  require_materializable(g);
  std::int64_t n = g.size();
  std::unordered_set<Elem> gen_set;
  std::vector<Elem> gens;
  auto add_gen = [&](Elem e) {
    if (gen_set.insert(e).second) gens.push_back(e);
  };
  for (std::int64_t x = 0; x < n; ++x) {
    Elem inv = g.inverse(x);
    add_gen(g.mul(inv, g.sigma(x)));
    add_gen(g.mul(inv, g.rho(x)));
  }
  std::vector<Elem> closure = close_subgroup(g, gens);

  // [[G,S],S] = [G,S]: regenerate from the closure and compare.
  std::unordered_set<Elem> gen_set2;
  std::vector<Elem> gens2;
  for (Elem k : closure) {
    Elem inv = g.inverse(k);
    Elem a = g.mul(inv, g.sigma(k));
    Elem b = g.mul(inv, g.rho(k));
    if (gen_set2.insert(a).second) gens2.push_back(a);
    if (gen_set2.insert(b).second) gens2.push_back(b);
  }
  std::vector<Elem> closure2 = close_subgroup(g, gens2);
  if (closure2 != closure) {
    fail(ErrorCode::InternalError, "commutator with S is not idempotent");
  }
  return closure;
}

std::vector<TrialityGroup::Elem> s_center(const TrialityGroup& g) {
  require_materializable(g);
  std::vector<Elem> k = commutator_with_s(g);
  std::int64_t n = g.size();
  std::vector<Elem> center;
  for (std::int64_t z = 0; z < n; ++z) {
    if (g.sigma(z) != z || g.rho(z) != z) continue;
    bool central = true;
    for (Elem e : k) {
      if (g.mul(z, e) != g.mul(e, z)) {
        central = false;
        break;
      }
    }
    if (central) center.push_back(z);
  }
  return center;
}

bool exponent3(const FiniteLoop& loop) {
  for (Idx x = 0; x < loop.order(); ++x) {
    if (loop.power(x, 3) != 0) return false;
  }
  return true;
}

bool rho_extension_is_triality(const TrialityGroup& g) {
  TrialityReport base = verify_triality(g);
  if (!base.ok()) {
    fail(ErrorCode::TrialityViolated,
         "rho extension needs a verified triality group");
  }
  std::int64_t n = g.size();
  if (n > 512) {
    fail(ErrorCode::CarrierTooLarge,
         "rho extension materializes a table; carrier must have <= 512 "
         "elements");
  }
  std::int64_t m = 3 * n;
  auto idx = [n](std::int64_t e, std::int64_t i) { return e + n * i; };
  std::vector<Idx> table(m * m);
  for (std::int64_t i = 0; i < 3; ++i) {
    for (std::int64_t j = 0; j < 3; ++j) {
      for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
          std::int64_t ry = y;
          for (std::int64_t t = 0; t < i; ++t) ry = g.rho(ry);
          table[idx(x, i) * m + idx(y, j)] =
              static_cast<Idx>(idx(g.mul(x, ry), (i + j) % 3));
        }
      }
    }
  }
  std::vector<std::string> labels(m);
  std::vector<Idx> sigma_images(m);
  std::vector<Idx> rho_images(m);
  for (std::int64_t i = 0; i < 3; ++i) {
    for (std::int64_t x = 0; x < n; ++x) {
      labels[idx(x, i)] = g.label(x) + "|" + std::to_string(i);
      sigma_images[idx(x, i)] = static_cast<Idx>(idx(g.sigma(x), (3 - i) % 3));
      rho_images[idx(x, i)] = static_cast<Idx>(idx(g.rho(x), i));
    }
  }
  FiniteLoop ext_table = FiniteLoop::from_flat_table(
      table, static_cast<Idx>(m), g.name() + ":rho_ext", labels);
  TrialityGroup ext = TrialityGroup::from_group(
      std::move(ext_table), Perm(std::move(sigma_images)),
      Perm(std::move(rho_images)), g.name() + ":rho_ext");
  bool ext_ok = verify_triality(ext).ok();
  bool exp3 = exponent3(*base.loop);
  if (ext_ok != exp3) {
    fail(ErrorCode::InternalError,
         "extension verdict disagrees with the loop exponent");
  }
  return ext_ok;
}

namespace {

void require_simple_group(const FiniteLoop& v, bool nonabelian) {
  if (!is_associative(v)) {
    fail(ErrorCode::NotAGroup, "builder input must be a group");
  }
  if (v.order() < 2) {
    fail(ErrorCode::InvalidParameter, "builder input must be nontrivial");
  }
  if (nonabelian && is_commutative(v)) {
    fail(ErrorCode::InvalidParameter, "builder input must be nonabelian");
  }
  std::vector<Subloop> mins = minimal_normal_subloops(v);
  if (mins.size() != 1 || !mins[0].is_whole()) {
    fail(ErrorCode::InvalidParameter, "builder input must be simple");
  }
}

}  // namespace

TrialityGroup build_trivial_action(const FiniteLoop& v) {
  require_simple_group(v, false);
  Perm id = Perm::identity(v.order());
  return TrialityGroup::from_group(v, id, id, "trivial(" + v.name() + ")");
}

TrialityGroup build_z3() {
  std::vector<Idx> table{0, 1, 2, 1, 2, 0, 2, 0, 1};
  FiniteLoop z3 = FiniteLoop::from_flat_table(table, 3, "Z3", {});
  Perm sigma(std::vector<Idx>{0, 2, 1});
  Perm rho = Perm::identity(3);
  return TrialityGroup::from_group(std::move(z3), std::move(sigma),
                                   std::move(rho), "z3");
}

TrialityGroup build_zpzp(int p) {
  if (!detail::is_prime(p) || p == 3) {
    fail(ErrorCode::InvalidParameter, "modulus must be a prime other than 3");
  }
  if (p > 31) {
    fail(ErrorCode::InvalidParameter,
         "modulus above 31 makes the materialized table too large");
  }
  std::int64_t n = static_cast<std::int64_t>(p) * p;
  auto enc = [p](int x, int y) { return static_cast<Idx>(x + p * y); };
  std::vector<Idx> table(n * n);
  std::vector<Idx> sigma_images(n);
  std::vector<Idx> rho_images(n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      Idx e = enc(x, y);
      for (int u = 0; u < p; ++u) {
        for (int v = 0; v < p; ++v) {
          table[static_cast<std::size_t>(e) * n + enc(u, v)] =
              enc((x + u) % p, (y + v) % p);
        }
      }
      sigma_images[e] = enc(y, x);
      rho_images[e] = enc((p - y) % p, ((x - y) % p + p) % p);
      labels[e] = "a" + std::to_string(x) + "b" + std::to_string(y);
    }
  }
  FiniteLoop grp = FiniteLoop::from_flat_table(
      table, static_cast<Idx>(n), "Z" + std::to_string(p) + "^2", labels);
  return TrialityGroup::from_group(std::move(grp), Perm(std::move(sigma_images)),
                                   Perm(std::move(rho_images)),
                                   "zpzp(" + std::to_string(p) + ")");
}

TrialityGroup build_wreath3(const FiniteLoop& v) {
  require_simple_group(v, true);
  return TrialityGroup::from_power(v, 3, {1, 0, 2}, {2, 0, 1},
                                   "wreath3(" + v.name() + ")");
}

TrialityGroup build_inner_s3() {
  // S3 as permutations of three points, composed postfix.
  std::vector<std::array<Idx, 3>> elems;
  std::array<Idx, 3> cur{0, 1, 2};
  std::sort(cur.begin(), cur.end());
  do {
    elems.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  auto find = [&](const std::array<Idx, 3>& p) -> Idx {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == p) return static_cast<Idx>(i);
    }
    fail(ErrorCode::InternalError, "permutation lookup failed");
  };
  std::vector<Idx> table(36);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<Idx, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = elems[j][elems[i][x]];
      table[i * 6 + j] = find(comp);
    }
  }
  std::vector<std::string> labels(6);
  for (std::size_t i = 0; i < 6; ++i) {
    labels[i] = std::string() + static_cast<char>('0' + elems[i][0]) +
                static_cast<char>('0' + elems[i][1]) +
                static_cast<char>('0' + elems[i][2]);
  }
  FiniteLoop s3 = FiniteLoop::from_flat_table(table, 6, "S3", labels);
  Idx t = -1;
  Idx c = -1;
  for (Idx x = 1; x < 6; ++x) {
    if (t < 0 && s3.element_order(x) == 2) t = x;
    if (c < 0 && s3.element_order(x) == 3) c = x;
  }
  auto conj = [&](Idx by) {
    std::vector<Idx> images(6);
    for (Idx x = 0; x < 6; ++x) {
      images[x] = s3.mul(s3.mul(s3.inverse(by), x), by);
    }
    return Perm(std::move(images));
  };
  Perm sigma = conj(t);
  Perm rho = conj(c);
  return TrialityGroup::from_group(std::move(s3), std::move(sigma),
                                   std::move(rho), "s3_inner");
}

}  // namespace moufang
