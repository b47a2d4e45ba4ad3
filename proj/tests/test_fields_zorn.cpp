#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "moufang/constructions.hpp"
#include "moufang/errors.hpp"
#include "moufang/gf.hpp"
#include "moufang/zorn.hpp"

using namespace moufang;

namespace {

// All 8-coordinate vector matrices over GF(q).
std::vector<ZornMatrix> all_zorn(int q) {
  std::vector<ZornMatrix> out;
  out.reserve(static_cast<std::size_t>(q) * q * q * q * q * q * q * q);
  ZornMatrix m;
  for (m.a = 0; m.a < q; ++m.a)
    for (m.v[0] = 0; m.v[0] < q; ++m.v[0])
      for (m.v[1] = 0; m.v[1] < q; ++m.v[1])
        for (m.v[2] = 0; m.v[2] < q; ++m.v[2])
          for (m.w[0] = 0; m.w[0] < q; ++m.w[0])
            for (m.w[1] = 0; m.w[1] < q; ++m.w[1])
              for (m.w[2] = 0; m.w[2] < q; ++m.w[2])
                for (m.b = 0; m.b < q; ++m.b) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
  for (int q : {2, 3, 4, 5, 7, 9}) {
    CAPTURE(q);
    const GaloisField& F = GaloisField::get(q);
    CHECK(F.q() == q);
    CHECK(q % F.p() == 0);
    CHECK(F.p() <= q);

    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.mul(a, 0) == 0);
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, a) == 0);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.div(a, a) == 1);
      }
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }

    // Characteristic: adding 1 p times reaches 0, never earlier.
    int acc = 0;
    for (int i = 1; i < F.p(); ++i) {
      acc = F.add(acc, 1);
      CHECK(acc != 0);
    }
    CHECK(F.add(acc, 1) == 0);

    // The multiplicative group is cyclic of order q - 1: some element has
    // full multiplicative order.
    bool found_primitive = false;
    for (int a = 1; a < q && !found_primitive; ++a) {
      int x = a;
      int ord = 1;
      while (x != 1) {
        x = F.mul(x, a);
        ++ord;
      }
      if (ord == q - 1) found_primitive = true;
    }
    CHECK(found_primitive);
  }
}

TEST_CASE("unsupported field sizes are refused") {
  for (int q : {0, 1, 6, 8, 10, 16}) {
    CAPTURE(q);
    try {
      GaloisField::get(q);
      CHECK(false);
    } catch (const MoufangError& e) {
      CHECK(e.code() == ErrorCode::UnsupportedFieldSize);
    }
  }
}

TEST_CASE("prime subfield embeds in the extension fields") {
  // Elements 0..p-1 encode the prime subfield by construction.
  for (int q : {4, 9}) {
    const GaloisField& F = GaloisField::get(q);
    const GaloisField& P = GaloisField::get(F.p());
    CHECK(F.degree() == 2);
    for (int a = 0; a < F.p(); ++a) {
      for (int b = 0; b < F.p(); ++b) {
        CHECK(F.add(a, b) == P.add(a, b));
        CHECK(F.mul(a, b) == P.mul(a, b));
      }
    }
  }
  CHECK(GaloisField::get(5).degree() == 1);
}

TEST_CASE("zorn identity and unit laws") {
  const ZornMatrix e = zorn_identity();
  for (int q : {2, 3, 5}) {
    const GaloisField& F = GaloisField::get(q);
    CHECK(zorn_det(F, e) == 1);
    for (const ZornMatrix& x : all_zorn(2)) {
      CHECK(zorn_multiply(F, e, x) == x);
      CHECK(zorn_multiply(F, x, e) == x);
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  SUBCASE("exhaustive over GF(2)") {
    const GaloisField& F = GaloisField::get(2);
    auto all = all_zorn(2);
    for (const ZornMatrix& x : all) {
      const int dx = zorn_det(F, x);
      for (const ZornMatrix& y : all) {
        CHECK(zorn_det(F, zorn_multiply(F, x, y)) ==
              F.mul(dx, zorn_det(F, y)));
      }
    }
  }
  SUBCASE("sampled over GF(3) and GF(5)") {
    for (int q : {3, 5}) {
      const GaloisField& F = GaloisField::get(q);
      std::uint64_t state = 12345;
      auto next = [&state, q]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) % q);
      };
      for (int trial = 0; trial < 4000; ++trial) {
        ZornMatrix x{next(), {next(), next(), next()},
                     {next(), next(), next()}, next()};
        ZornMatrix y{next(), {next(), next(), next()},
                     {next(), next(), next()}, next()};
        CHECK(zorn_det(F, zorn_multiply(F, x, y)) ==
              F.mul(zorn_det(F, x), zorn_det(F, y)));
      }
    }
  }
}

TEST_CASE("zorn algebra is alternative but not associative") {
  const GaloisField& F = GaloisField::get(3);
  std::uint64_t state = 99;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % 3);
  };
  auto rnd = [&next]() {
    return ZornMatrix{next(), {next(), next(), next()},
                      {next(), next(), next()}, next()};
  };
  bool associator_seen = false;
  for (int trial = 0; trial < 2000; ++trial) {
    ZornMatrix x = rnd();
    ZornMatrix y = rnd();
    // Left and right alternative laws.
    CHECK(zorn_multiply(F, x, zorn_multiply(F, x, y)) ==
          zorn_multiply(F, zorn_multiply(F, x, x), y));
    CHECK(zorn_multiply(F, zorn_multiply(F, y, x), x) ==
          zorn_multiply(F, y, zorn_multiply(F, x, x)));
    ZornMatrix z = rnd();
    if (!(zorn_multiply(F, zorn_multiply(F, x, y), z) ==
          zorn_multiply(F, x, zorn_multiply(F, y, z))))
      associator_seen = true;
  }
  CHECK(associator_seen);
}

TEST_CASE("negate and scale") {
  const GaloisField& F = GaloisField::get(5);
  std::uint64_t state = 7;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % 5);
  };
  for (int trial = 0; trial < 500; ++trial) {
    ZornMatrix x{next(), {next(), next(), next()},
                 {next(), next(), next()}, next()};
    CHECK(zorn_negate(F, x) == zorn_scale(F, F.neg(1), x));
    CHECK(zorn_scale(F, 1, x) == x);
    CHECK(zorn_scale(F, 0, x) == ZornMatrix{});
    // det(lambda x) = lambda^2 det(x): the form is quadratic.
    for (int lam = 0; lam < 5; ++lam) {
      CHECK(zorn_det(F, zorn_scale(F, lam, x)) ==
            F.mul(F.mul(lam, lam), zorn_det(F, x)));
    }
    ZornMatrix y{next(), {next(), next(), next()},
                 {next(), next(), next()}, next()};
    // (-x)y = -(xy) = x(-y).
    CHECK(zorn_multiply(F, zorn_negate(F, x), y) ==
          zorn_negate(F, zorn_multiply(F, x, y)));
    CHECK(zorn_multiply(F, x, zorn_negate(F, y)) ==
          zorn_negate(F, zorn_multiply(F, x, y)));
  }
}

TEST_CASE("zorn labels") {
  CHECK(zorn_label(zorn_identity()) == "1|000|000|1");
  CHECK(zorn_label(ZornMatrix{2, {0, 1, 2}, {1, 0, 0}, 1}) == "2|012|100|1");
}

TEST_CASE("paige class representatives") {
  SUBCASE("counts follow the order formula") {
    CHECK(paige_class_reps(2).size() == 120);
    CHECK(paige_class_reps(3).size() == 1080);
    CHECK(paige_class_reps(4).size() == 16320);
    CHECK(paige_class_reps(5).size() == 39000);
  }

  SUBCASE("every representative has unit determinant and is canonical") {
    for (int q : {2, 3}) {
      const GaloisField& F = GaloisField::get(q);
      auto reps = paige_class_reps(q);
      std::set<ZornMatrix> seen;
      for (const ZornMatrix& m : reps) {
        CHECK(zorn_det(F, m) == 1);
        // Canonical: not lexicographically above its negation.
        ZornMatrix n = zorn_negate(F, m);
        CHECK(!(n < m));
        seen.insert(m);
        CHECK(seen.count(n) == (n == m ? 1u : 0u));
      }
      CHECK(seen.size() == reps.size());
    }
  }

  SUBCASE("ascending field tuple order") {
    auto reps = paige_class_reps(2);
    for (std::size_t i = 1; i < reps.size(); ++i) {
      CHECK(reps[i - 1] < reps[i]);
    }
  }

  SUBCASE("identity class is listed") {
    auto reps = paige_class_reps(3);
    bool has_identity = false;
    for (const ZornMatrix& m : reps)
      if (m == zorn_identity()) has_identity = true;
    CHECK(has_identity);
  }

  SUBCASE("unsupported sizes are refused") {
    CHECK_THROWS_AS(paige_class_reps(7), MoufangError);
    CHECK_THROWS_AS(paige_class_reps(1), MoufangError);
  }
}
