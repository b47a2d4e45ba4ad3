#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "moufang/constructions.hpp"
#include "moufang/errors.hpp"
#include "moufang/loop.hpp"
#include "oracles.hpp"

using namespace moufang;

namespace {

FiniteLoop z6() { return cyclic_group(6); }

std::vector<Idx> sorted_copy(std::vector<Idx> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("cayley table validation") {
  SUBCASE("valid tiny tables") {
    FiniteLoop one = FiniteLoop::from_cayley_table({{0}});
    CHECK(one.order() == 1);
    FiniteLoop z2 = FiniteLoop::from_cayley_table({{0, 1}, {1, 0}});
    CHECK(z2.order() == 2);
    CHECK(z2.mul(1, 1) == 0);
  }

  SUBCASE("row repeats an entry") {
    CHECK_THROWS_AS(FiniteLoop::from_cayley_table({{0, 0}, {1, 1}}),
                    MoufangError);
    try {
      FiniteLoop::from_cayley_table({{0, 0}, {1, 1}});
    } catch (const MoufangError& e) {
      CHECK(e.code() == ErrorCode::NotLatinSquare);
    }
  }

  SUBCASE("column repeats an entry") {
    try {
      FiniteLoop::from_cayley_table({{0, 1}, {0, 1}});
    } catch (const MoufangError& e) {
      CHECK(e.code() == ErrorCode::NotLatinSquare);
    }
  }

  SUBCASE("identity must sit at index 0") {
    // Valid Latin square but row 0 is not the identity row.
    try {
      FiniteLoop::from_cayley_table({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}});
      CHECK(false);
    } catch (const MoufangError& e) {
      CHECK(e.code() == ErrorCode::NoIdentity);
    }
  }

  SUBCASE("ragged rows rejected") {
    CHECK_THROWS_AS(FiniteLoop::from_cayley_table({{0, 1}, {1}}),
                    MoufangError);
  }

  SUBCASE("out of range entries rejected") {
    CHECK_THROWS_AS(FiniteLoop::from_cayley_table({{0, 1}, {1, 2}}),
                    MoufangError);
  }

  SUBCASE("empty table rejected") {
    CHECK_THROWS_AS(FiniteLoop::from_cayley_table({}), MoufangError);
  }

  SUBCASE("oversize table rejected before the data is touched") {
    try {
      FiniteLoop::from_flat_table({}, 5000);
      CHECK(false);
    } catch (const MoufangError& e) {
      CHECK(e.code() == ErrorCode::TableTooLarge);
    }
  }
}

TEST_CASE("division and inverses agree with the table") {
  FiniteLoop loop = chein_double(symmetric_group(3));
  const Idx n = loop.order();
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      const Idx c = loop.mul(x, y);
      CHECK(loop.ldiv(x, c) == y);
      CHECK(loop.rdiv(c, y) == x);
    }
  }
  CHECK(loop.has_two_sided_inverses());
  for (Idx x = 0; x < n; ++x) {
    const Idx xi = loop.inverse(x);
    CHECK(loop.mul(x, xi) == 0);
    CHECK(loop.mul(xi, x) == 0);
  }
}

TEST_CASE("powers and element orders") {
  FiniteLoop loop = z6();
  CHECK(loop.power(1, 0) == 0);
  CHECK(loop.power(1, 1) == 1);
  CHECK(loop.power(1, 6) == 0);
  CHECK(loop.power(1, -1) == loop.inverse(1));
  CHECK(loop.power(1, -7) == loop.inverse(1));

  // Orders in Z6 = {1,6,3,2,3,6} for elements 0..5 in the additive ordering
  // produced by cyclic_group.
  std::multiset<Idx> orders;
  for (Idx x = 0; x < 6; ++x) orders.insert(loop.element_order(x));
  CHECK(orders == std::multiset<Idx>{1, 2, 3, 3, 6, 6});

  // For each x and k, power honors x^(a+b) = x^a x^b in a power-associative
  // loop. Chein doubles are Moufang hence power associative.
  FiniteLoop m12 = chein_double(symmetric_group(3));
  for (Idx x = 0; x < m12.order(); ++x) {
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        CHECK(m12.mul(m12.power(x, a), m12.power(x, b)) == m12.power(x, a + b));
      }
    }
  }
}

TEST_CASE("moufang and associativity checks") {
  CHECK(is_associative(z6()));
  CHECK(is_moufang(z6()));
  CHECK(is_commutative(z6()));

  FiniteLoop s3 = symmetric_group(3);
  CHECK(is_associative(s3));
  CHECK(!is_commutative(s3));

  FiniteLoop m12 = chein_double(s3);
  CHECK(is_moufang(m12));
  CHECK(!is_associative(m12));
  TripleReport assoc = check_associative(m12);
  CHECK(!assoc.ok);
  // The witness is a genuine associativity failure.
  const auto [x, y, z] = assoc.witness;
  CHECK(m12.mul(m12.mul(x, y), z) != m12.mul(x, m12.mul(y, z)));

  // A non-Moufang loop: smallest such has order 5.
  FiniteLoop l5 = FiniteLoop::from_cayley_table({{0, 1, 2, 3, 4},
                                                 {1, 0, 3, 4, 2},
                                                 {2, 3, 4, 0, 1},
                                                 {3, 4, 1, 2, 0},
                                                 {4, 2, 0, 1, 3}});
  TripleReport rep = check_moufang(l5);
  CHECK(!rep.ok);
  const auto [a, b, c] = rep.witness;
  CHECK(l5.mul(l5.mul(a, b), l5.mul(c, a)) !=
        l5.mul(l5.mul(a, l5.mul(b, c)), a));
}

TEST_CASE("commutator and nucleus") {
  FiniteLoop s3 = symmetric_group(3);
  for (Idx x = 0; x < s3.order(); ++x) {
    for (Idx y = 0; y < s3.order(); ++y) {
      const Idx c = commutator(s3, x, y);
      CHECK(s3.mul(x, y) == s3.mul(s3.mul(y, x), c));
    }
  }
  // Nucleus of a group is everything; of Chein M(S3,2) it is trivial.
  CHECK(nucleus(s3).is_whole());
  FiniteLoop m12 = chein_double(s3);
  CHECK(nucleus(m12).size() == 1);
}

TEST_CASE("generated subloop matches fixed point closure oracle") {
  std::vector<FiniteLoop> corpus;
  corpus.push_back(z6());
  corpus.push_back(symmetric_group(4));
  corpus.push_back(chein_double(symmetric_group(3)));
  corpus.push_back(quaternion_group8());
  corpus.push_back(chein_double(dihedral_group(4)));
  for (const FiniteLoop& loop : corpus) {
    const Idx n = loop.order();
    for (Idx g = 0; g < n; ++g) {
      std::vector<Idx> gens{g};
      Subloop got = generated_subloop(loop, gens);
      CHECK(got.elements() == oracles::oracle_closure(loop, gens));
    }
    // A few two-generator sets.
    for (Idx g = 1; g < n; g += 3) {
      std::vector<Idx> gens{g, static_cast<Idx>((g + 2) % n)};
      Subloop got = generated_subloop(loop, gens);
      CHECK(got.elements() == oracles::oracle_closure(loop, gens));
    }
  }
}

TEST_CASE("capped closure returns nullopt when the cap binds") {
  FiniteLoop s4 = symmetric_group(4);
  std::vector<Idx> gens{1, 2, 3};
  Subloop full = generated_subloop(s4, gens);
  auto capped = generated_subloop_capped(s4, gens, full.size());
  REQUIRE(capped.has_value());
  CHECK(capped->elements() == full.elements());
  if (full.size() > 1) {
    CHECK(!generated_subloop_capped(s4, gens, full.size() - 1).has_value());
  }
}

TEST_CASE("normality test matches the translation map oracle") {
  std::vector<FiniteLoop> corpus;
  corpus.push_back(symmetric_group(3));
  corpus.push_back(chein_double(symmetric_group(3)));
  corpus.push_back(dihedral_group(4));
  corpus.push_back(quaternion_group8());
  for (const FiniteLoop& loop : corpus) {
    for (const std::vector<Idx>& elems : oracles::brute_subloops(loop)) {
      Subloop sub(Subloop::unchecked, loop, elems);
      CHECK(is_normal(loop, sub) == oracles::oracle_is_normal(loop, elems));
    }
  }
}

TEST_CASE("normal closure is the least normal subloop containing the seed") {
  std::vector<FiniteLoop> corpus;
  corpus.push_back(symmetric_group(3));
  corpus.push_back(dihedral_group(4));
  corpus.push_back(chein_double(symmetric_group(3)));
  for (const FiniteLoop& loop : corpus) {
    for (Idx g = 0; g < loop.order(); ++g) {
      std::vector<Idx> gens{g};
      Subloop nc = normal_closure(loop, gens);
      CHECK(is_normal(loop, nc));
      CHECK(nc.contains(g));
      // Minimality: every normal subloop containing g contains nc.
      for (const std::vector<Idx>& elems : oracles::brute_subloops(loop)) {
        if (!std::binary_search(elems.begin(), elems.end(), g)) continue;
        if (!oracles::oracle_is_normal(loop, elems)) continue;
        CHECK(std::includes(elems.begin(), elems.end(),
                            nc.elements().begin(), nc.elements().end()));
      }
    }
  }
}

TEST_CASE("minimal normal subloops of small groups") {
  SUBCASE("S3 has a unique minimal normal subgroup A3") {
    FiniteLoop s3 = symmetric_group(3);
    auto mins = minimal_normal_subloops(s3);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].size() == 3);
  }
  SUBCASE("Z6 has Z2 and Z3") {
    FiniteLoop loop = z6();
    auto mins = minimal_normal_subloops(loop);
    REQUIRE(mins.size() == 2);
    std::multiset<std::size_t> sizes{mins[0].size(), mins[1].size()};
    CHECK(sizes == std::multiset<std::size_t>{2, 3});
  }
  SUBCASE("Q8 has a unique minimal normal subgroup of order 2") {
    FiniteLoop q8 = quaternion_group8();
    auto mins = minimal_normal_subloops(q8);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].size() == 2);
  }
  SUBCASE("A5 is minimal in itself") {
    FiniteLoop a5 = alternating_group(5);
    auto mins = minimal_normal_subloops(a5);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].is_whole());
  }
}

TEST_CASE("intersection and join") {
  FiniteLoop loop = z6();
  Subloop a = generated_subloop(loop, std::vector<Idx>{loop.power(1, 2)});
  Subloop b = generated_subloop(loop, std::vector<Idx>{loop.power(1, 3)});
  CHECK(a.size() == 3);
  CHECK(b.size() == 2);
  CHECK(subloop_intersection(a, b).size() == 1);
  CHECK(subloop_join(a, b).is_whole());
  CHECK(subloop_intersection(a, whole_subloop(loop)).elements() ==
        a.elements());
  CHECK(subloop_join(a, trivial_subloop(loop)).elements() == a.elements());
}

TEST_CASE("quotient is a homomorphic image") {
  FiniteLoop m12 = chein_double(symmetric_group(3));
  auto mins = minimal_normal_subloops(m12);
  REQUIRE(!mins.empty());
  const Subloop& nsub = mins[0];
  QuotientResult q = quotient(m12, nsub);
  CHECK(q.loop.order() * static_cast<Idx>(nsub.size()) == m12.order());
  CHECK(q.projection[0] == 0);
  for (Idx x = 0; x < m12.order(); ++x) {
    for (Idx y = 0; y < m12.order(); ++y) {
      CHECK(q.projection[m12.mul(x, y)] ==
            q.loop.mul(q.projection[x], q.projection[y]));
    }
  }
  // Quotient by a non-normal subloop must be refused.
  bool tried_non_normal = false;
  for (Idx x = 1; x < m12.order() && !tried_non_normal; ++x) {
    Subloop sub = generated_subloop(m12, std::vector<Idx>{x});
    if (is_normal(m12, sub)) continue;
    tried_non_normal = true;
    CHECK_THROWS_AS(quotient(m12, sub), MoufangError);
  }
  CHECK(tried_non_normal);
}

TEST_CASE("extract subloop relabels to a standalone loop") {
  FiniteLoop s4 = symmetric_group(4);
  // Any subgroup of order 6 of S4 is isomorphic to S3; find one by closing
  // element pairs.
  Subloop sub = trivial_subloop(s4);
  for (Idx x = 1; x < s4.order() && sub.size() != 6; ++x) {
    for (Idx y = x + 1; y < s4.order() && sub.size() != 6; ++y) {
      auto cand = generated_subloop_capped(s4, std::vector<Idx>{x, y}, 6);
      if (cand && cand->size() == 6) sub = *cand;
    }
  }
  REQUIRE(sub.size() == 6);
  FiniteLoop ex = extract_subloop(s4, sub);
  CHECK(ex.order() == 6);
  CHECK(is_isomorphic(ex, symmetric_group(3)));
}

TEST_CASE("direct product multiplies componentwise") {
  FiniteLoop prod = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(prod.order() == 6);
  CHECK(is_isomorphic(prod, z6()));
  FiniteLoop m12 = chein_double(symmetric_group(3));
  FiniteLoop big = direct_product(m12, cyclic_group(2));
  CHECK(big.order() == 24);
  CHECK(is_moufang(big));
  CHECK(!is_associative(big));
}

TEST_CASE("isomorphism search") {
  CHECK(is_isomorphic(cyclic_group(4), cyclic_group(4)));
  CHECK(!is_isomorphic(cyclic_group(4),
                       direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(!is_isomorphic(dihedral_group(4), quaternion_group8()));
  CHECK(is_isomorphic(psl2(2), symmetric_group(3)));

  auto map = find_isomorphism(symmetric_group(3), psl2(2));
  REQUIRE(map.has_value());
  FiniteLoop a = symmetric_group(3);
  FiniteLoop b = psl2(2);
  for (Idx x = 0; x < a.order(); ++x) {
    for (Idx y = 0; y < a.order(); ++y) {
      CHECK((*map)[a.mul(x, y)] == b.mul((*map)[x], (*map)[y]));
    }
  }
}

TEST_CASE("subloop orders divide the loop order") {
  std::vector<FiniteLoop> corpus;
  corpus.push_back(chein_double(symmetric_group(3)));
  corpus.push_back(chein_double(dihedral_group(4)));
  corpus.push_back(quaternion_group8());
  corpus.push_back(alternating_group(4));
  for (const FiniteLoop& loop : corpus) {
    for (const std::vector<Idx>& elems : oracles::brute_subloops(loop)) {
      CHECK(loop.order() % static_cast<Idx>(elems.size()) == 0);
    }
  }
}

TEST_CASE("fingerprint distinguishes tables and survives relabeling checks") {
  CHECK(cyclic_group(4).table_fingerprint() ==
        cyclic_group(4).table_fingerprint());
  CHECK(cyclic_group(4).table_fingerprint() !=
        dihedral_group(4).table_fingerprint());
  FiniteLoop named = cyclic_group(4).with_name("other");
  CHECK(named.table_fingerprint() == cyclic_group(4).table_fingerprint());
  CHECK(named.name() == "other");
}

TEST_CASE("labels default to indices and must match the order") {
  FiniteLoop z2 = FiniteLoop::from_cayley_table({{0, 1}, {1, 0}}, "z2",
                                                {"e", "t"});
  CHECK(z2.label(0) == "e");
  CHECK(z2.label(1) == "t");
  FiniteLoop plain = FiniteLoop::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(plain.label(1) == "1");
  CHECK_THROWS_AS(
      FiniteLoop::from_cayley_table({{0, 1}, {1, 0}}, "bad", {"e"}),
      MoufangError);
}

TEST_CASE("subloop constructor validates closure") {
  FiniteLoop loop = z6();
  CHECK_NOTHROW(Subloop(loop, {0, 2, 4}));
  CHECK_THROWS_AS(Subloop(loop, {0, 1}), MoufangError);
  CHECK_THROWS_AS(Subloop(loop, {2, 4}), MoufangError);
  Subloop sub(loop, {4, 0, 2});
  CHECK(sub.elements() == sorted_copy({0, 2, 4}));
}
