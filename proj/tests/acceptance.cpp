// End-to-end acceptance run: eleven scenarios exercising the toolkit on the
// loops it was built for, each printed as one PASS/FAIL line. Time limits
// are pinned here next to the scenario they bound. Exits nonzero when any
// scenario fails a check or a limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "moufang/constructions.hpp"
#include "moufang/errors.hpp"
#include "moufang/loop.hpp"
#include "moufang/mappings.hpp"
#include "moufang/perm_group.hpp"
#include "moufang/s3module.hpp"
#include "moufang/structure.hpp"
#include "moufang/triality.hpp"

#include "oracles.hpp"

namespace {

using namespace moufang;
using Elem = TrialityGroup::Elem;

struct Outcome {
  std::vector<std::string> failures;
};

void expect(Outcome& out, bool ok, const std::string& what) {
  if (!ok) out.failures.push_back(what);
}

std::string num(std::int64_t v) { return std::to_string(v); }

std::vector<std::int64_t> primes_of(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::vector<Elem> m_set(const TrialityGroup& g) {
  std::set<Elem> m;
  for (Elem x = 0; x < g.size(); ++x)
    m.insert(g.mul(g.inverse(x), g.sigma(x)));
  return {m.begin(), m.end()};
}

// 1. The split octonion unit loop over the two element field.
void scenario_paige2_basics(Outcome& out) {
  FiniteLoop m2 = paige_loop(2);
  expect(out, m2.order() == 120, "order is " + num(m2.order()));
  expect(out, is_moufang(m2), "not Moufang");
  expect(out, !is_associative(m2), "unexpectedly associative");
  std::vector<Subloop> mins = minimal_normal_subloops(m2);
  expect(out, mins.size() == 1 && mins[0].is_whole(), "not simple");
  bool orders_divide_six = true;
  bool no_order_five = true;
  for (Idx x = 0; x < m2.order(); ++x) {
    Idx o = m2.element_order(x);
    if (6 % o != 0) orders_divide_six = false;
    if (o == 5) no_order_five = false;
  }
  expect(out, orders_divide_six, "an element order does not divide 6");
  expect(out, no_order_five, "an element of order 5 exists");
}

// 2. Sylow verdicts on the simple loop of order 120, with the absence of
// order-5 subloops confirmed by full enumeration.
void scenario_paige2_sylow(Outcome& out) {
  FiniteLoop m2 = paige_loop(2);
  SylowVerdict v2 = sylow_verdict(m2, 2);
  SylowVerdict v3 = sylow_verdict(m2, 3);
  SylowVerdict v5 = sylow_verdict(m2, 5);
  expect(out, v2.sylow, "p=2 should pass");
  expect(out, v3.sylow, "p=3 should pass");
  expect(out, !v5.sylow, "p=5 should fail");
  expect(out, v5.witnesses == std::vector<std::int64_t>{2},
         "p=5 witness should be the parameter 2");
  Subloop s2 = find_p_sylow(m2, 2);
  Subloop s3 = find_p_sylow(m2, 3);
  expect(out, s2.size() == 8, "2-Sylow order is " + num(s2.size()));
  expect(out, s3.size() == 3, "3-Sylow order is " + num(s3.size()));
  std::vector<Subloop> all = enumerate_subloops(m2);
  bool none_of_order_five = true;
  for (const Subloop& sub : all)
    if (sub.size() == 5) none_of_order_five = false;
  expect(out, none_of_order_five, "a subloop of order 5 exists");
  expect(out, all.size() > 2, "enumeration looks truncated");
}

// 3. Sylow subloops of the order 1080 loop over the three element field.
void scenario_paige3_sylow(Outcome& out) {
  FiniteLoop m3 = paige_loop(3);
  expect(out, m3.order() == 1080, "order is " + num(m3.order()));
  Subloop s3 = find_p_sylow(m3, 3);
  expect(out, s3.size() == 27, "3-Sylow order is " + num(s3.size()));
  Subloop s2 = find_p_sylow(m3, 2);
  expect(out, s2.size() == 8, "2-Sylow order is " + num(s2.size()));
  SylowVerdict v5 = sylow_verdict(m3, 5);
  expect(out, !v5.sylow, "p=5 should fail");
  expect(out, v5.witnesses == std::vector<std::int64_t>{3},
         "p=5 witness should be the parameter 3");
  bool threw = false;
  try {
    (void)find_p_sylow(m3, 5);
  } catch (const MoufangError& e) {
    threw = e.code() == ErrorCode::NotSylowPrime;
  }
  expect(out, threw, "find_p_sylow(., 5) should refuse");
}

// 4. Chief series and socle analysis of the doubled unit loop of order 2160.
void scenario_paige3_hat_series(Outcome& out) {
  FiniteLoop hat = paige_hat(3);
  expect(out, hat.order() == 2160, "order is " + num(hat.order()));
  CompositionData data = chief_decomposition(hat);
  auto factors = data.factors();
  expect(out, factors.size() == 2,
         "expected two factor kinds, got " + num(factors.size()));
  bool has_paige = false;
  bool has_z2 = false;
  for (const auto& [kind, mult] : factors) {
    if (kind == paige_factor(3) && mult == 1) has_paige = true;
    if (kind == cyclic_prime_factor(2) && mult == 1) has_z2 = true;
  }
  expect(out, has_paige, "missing the order 1080 simple factor");
  expect(out, has_z2, "missing the order 2 factor");
  Subloop radical = group_type_radical(hat);
  expect(out, radical.is_trivial(),
         "group type radical order is " + num(radical.size()));
  SocleReport socle = socle_check(hat);
  expect(out, socle.ok, "socle analysis failed: " + socle.note);
  expect(out, socle.socle.size() == 1080,
         "socle order is " + num(socle.socle.size()));
  expect(out, socle.quotient.order() == 2,
         "socle quotient order is " + num(socle.quotient.order()));
  expect(out, socle.quotient_elementary_abelian_2,
         "socle quotient is not elementary abelian of exponent 2");
}

// 5. Multiplication and inner mapping group orders of the order 120 loop,
// against the closed form q^12 (q^6-1) (q^4-1)^2 (q^2-1) / d^2 at q = 2.
void scenario_paige2_mlt(Outcome& out) {
  FiniteLoop m2 = paige_loop(2);
  const std::int64_t q = 2, d = 1;
  std::int64_t expected = 1;
  for (int i = 0; i < 12; ++i) expected *= q;
  std::int64_t q2 = q * q, q4 = q2 * q2, q6 = q4 * q2;
  expected = expected * (q6 - 1) * (q4 - 1) * (q4 - 1) * (q2 - 1) / (d * d);
  expect(out, expected == 174182400, "closed form arithmetic is off");
  PermGroup mlt = multiplication_group(m2);
  expect(out, mlt.order() == expected,
         "multiplication group order is " + mlt.order().str());
  PermGroup inn = inner_mapping_group(m2);
  expect(out, inn.order() == 1451520,
         "inner mapping group order is " + inn.order().str());
  expect(out, expected == 1451520 * 120, "orders do not telescope");
}

// 6. The named triality archetypes verify, their loops are the expected
// ones, and the two commutator set identities hold exhaustively on every
// archetype with an explicit Cayley carrier.
void scenario_triality_archetypes(Outcome& out) {
  FiniteLoop a5 = alternating_group(5);

  TrialityGroup z3 = build_z3();
  TrialityReport rz3 = verify_triality(z3);
  expect(out, rz3.ok(), "z3 archetype fails");
  expect(out, rz3.loop && is_isomorphic(*rz3.loop, cyclic_group(3)),
         "z3 loop is not the cyclic group of order 3");

  TrialityGroup zp5 = build_zpzp(5);
  TrialityReport rzp5 = verify_triality(zp5);
  expect(out, rzp5.ok(), "zpzp(5) archetype fails");
  expect(out, rzp5.loop && is_isomorphic(*rzp5.loop, cyclic_group(5)),
         "zpzp(5) loop is not the cyclic group of order 5");

  TrialityGroup w = build_wreath3(a5);
  TrialityReport rw = verify_triality(w);
  expect(out, rw.ok(), "wreath archetype fails");
  if (rw.loop) {
    const FiniteLoop& loop = *rw.loop;
    expect(out, loop.order() == 60, "wreath loop order is " + num(loop.order()));
    expect(out, is_associative(loop), "wreath loop is not a group");
    expect(out, !is_commutative(loop), "wreath loop is abelian");
    std::vector<Subloop> mins = minimal_normal_subloops(loop);
    expect(out, mins.size() == 1 && mins[0].is_whole(),
           "wreath loop is not simple");
    expect(out, is_isomorphic(loop, a5),
           "wreath loop is not the alternating group of degree 5");
  } else {
    expect(out, false, "wreath archetype extracted no loop");
  }

  std::vector<TrialityGroup> carriers;
  carriers.push_back(build_z3());
  carriers.push_back(build_inner_s3());
  carriers.push_back(build_trivial_action(a5));
  carriers.push_back(build_zpzp(2));
  carriers.push_back(build_zpzp(5));
  for (const TrialityGroup& g : carriers) {
    expect(out, g.kind() == TrialityGroup::CarrierKind::Cayley,
           g.name() + " carrier is not an explicit table");
    std::vector<Elem> m = m_set(g);
    bool orbit_commutes = true;
    bool reversal_holds = true;
    for (Elem a : m) {
      const Elem b = g.rho(a);
      const Elem c = g.rho(b);
      if (g.mul(a, b) != g.mul(b, a) || g.mul(a, c) != g.mul(c, a) ||
          g.mul(b, c) != g.mul(c, b))
        orbit_commutes = false;
      const Elem ar = g.inverse(b);
      const Elem arr = g.inverse(c);
      for (Elem n : m) {
        const Elem nr = g.inverse(g.rho(n));
        const Elem nrr = g.inverse(g.rho(g.rho(n)));
        // m^-rho n m^-rho^2 = n^-rho^2 m n^-rho.
        if (g.mul(g.mul(ar, n), arr) != g.mul(g.mul(nrr, a), nr))
          reversal_holds = false;
      }
    }
    expect(out, orbit_commutes, g.name() + ": rho orbit does not commute");
    expect(out, reversal_holds, g.name() + ": reversal identity fails");
  }
}

// 7. Extending by the order 3 map is a triality group exactly when the
// extracted loop has exponent 3, checked on both a positive and a negative
// archetype.
void scenario_rho_extension(Outcome& out) {
  TrialityGroup z3 = build_z3();
  bool ext_z3 = rho_extension_is_triality(z3);
  bool exp_z3 = exponent3(*verify_triality(z3).loop);
  expect(out, ext_z3, "extension verdict for z3 should be positive");
  expect(out, exp_z3, "z3 loop should have exponent 3");
  expect(out, ext_z3 == exp_z3, "verdicts disagree on z3");

  TrialityGroup zp2 = build_zpzp(2);
  bool ext_zp2 = rho_extension_is_triality(zp2);
  bool exp_zp2 = exponent3(*verify_triality(zp2).loop);
  expect(out, !ext_zp2, "extension verdict for zpzp(2) should be negative");
  expect(out, !exp_zp2, "zpzp(2) loop should not have exponent 3");
  expect(out, ext_zp2 == exp_zp2, "verdicts disagree on zpzp(2)");
}

// 8. Conjugation on the symmetric group of degree 3 yields the loop Z3, for
// which 2 is vacuously a Sylow prime, yet none of the three 2-Sylow
// subgroups of the carrier is invariant under both maps.
void scenario_inner_s3(Outcome& out) {
  TrialityGroup g = build_inner_s3();
  TrialityReport report = verify_triality(g);
  expect(out, report.ok(), "inner-s3 archetype fails");
  if (!report.loop) {
    expect(out, false, "inner-s3 extracted no loop");
    return;
  }
  FiniteLoop loop = *report.loop;
  expect(out, is_isomorphic(loop, cyclic_group(3)),
         "loop is not the cyclic group of order 3");
  SylowVerdict v2 = sylow_verdict(loop, 2);
  expect(out, v2.sylow, "2 should be a Sylow prime for the loop");
  Subloop s2 = find_p_sylow(loop, 2);
  expect(out, s2.size() == 1, "the 2-Sylow subloop should be trivial");

  std::vector<Elem> involutions;
  for (Elem x = 1; x < g.size(); ++x)
    if (g.mul(x, x) == g.identity()) involutions.push_back(x);
  expect(out, involutions.size() == 3,
         "carrier should have exactly three involutions");
  bool none_invariant = true;
  for (Elem t : involutions)
    if (g.sigma(t) == t && g.rho(t) == t) none_invariant = false;
  expect(out, none_invariant,
         "a 2-Sylow subgroup of the carrier is invariant under both maps");
}

// 9. Every catalog module satisfies the S3 relations and the triality
// criterion matches the recorded verdict: nine positive rows, three
// refusals.
void scenario_module_catalog(Outcome& out) {
  auto rows = table1_rows();
  expect(out, rows.size() == 12, "catalog should have 12 rows");
  int positives = 0;
  std::set<std::pair<int, int>> refusals;
  for (auto [chi, index] : rows) {
    S3Module mod = table1_module(chi, index);
    bool relations = s3_relations_hold(mod);
    expect(out, relations, mod.name + ": relations fail");
    bool verdict = relations && is_triality_module(mod);
    bool expected = table1_expected(chi, index);
    expect(out, verdict == expected, mod.name + ": verdict mismatch");
    if (verdict)
      ++positives;
    else
      refusals.insert({chi, index});
  }
  expect(out, positives == 9, "expected nine positive rows");
  std::set<std::pair<int, int>> expected_refusals{{0, 2}, {2, 3}, {3, 6}};
  expect(out, refusals == expected_refusals, "refusal rows differ");
}

// 10. Doubling constructions: the doubled symmetric group is the smallest
// nonassociative Moufang loop, and the doubled dihedral group is a Moufang
// 2-loop whose permutation invariants stay 2-power sized.
void scenario_chein_doubles(Outcome& out) {
  FiniteLoop c12 = chein_double(symmetric_group(3));
  expect(out, c12.order() == 12, "doubled S3 order is " + num(c12.order()));
  expect(out, is_moufang(c12), "doubled S3 is not Moufang");
  expect(out, !is_associative(c12), "doubled S3 is associative");

  FiniteLoop c16 = chein_double(dihedral_group(4));
  expect(out, c16.order() == 16, "doubled D4 order is " + num(c16.order()));
  expect(out, is_moufang(c16), "doubled D4 is not Moufang");
  bool two_loop = true;
  for (Idx x = 0; x < c16.order(); ++x)
    if (!power_of_two(static_cast<std::uint64_t>(c16.element_order(x))))
      two_loop = false;
  expect(out, two_loop, "doubled D4 has an element of odd order");
  PermGroup mlt = multiplication_group(c16);
  BigInt mo = mlt.order();
  while (mo % 2 == 0) mo /= 2;
  expect(out, mo == 1, "multiplication group order is not a power of 2");
  PsInnResult ps = psinn_group(c16);
  expect(out, power_of_two(ps.elements.size()),
         "pseudoautomorphism group order is not a power of 2");
}

// 11. Cross-cutting properties on a mixed corpus: Lagrange divisibility,
// the index identity |<P,N>| |P intersect N| = |P| |N| for normal N, full
// agreement with brute force subloop enumeration and normality up to order
// 24, and the p-radical laws.
void scenario_properties(Outcome& out) {
  std::vector<FiniteLoop> corpus;
  corpus.push_back(symmetric_group(3));
  corpus.push_back(quaternion_group8());
  corpus.push_back(cyclic_group(12));
  corpus.push_back(alternating_group(4));
  corpus.push_back(chein_double(symmetric_group(3)));
  corpus.push_back(chein_double(dihedral_group(4)));
  corpus.push_back(symmetric_group(4));
  corpus.push_back(paige_loop(2));

  for (const FiniteLoop& loop : corpus) {
    const std::string tag = loop.name() + ": ";

    std::vector<Subloop> subs = enumerate_subloops(loop);
    bool lagrange = true;
    for (const Subloop& sub : subs)
      if (loop.order() % static_cast<Idx>(sub.size()) != 0) lagrange = false;
    expect(out, lagrange, tag + "a subloop order does not divide");

    std::mt19937 rng(0xC0FFEE);
    bool index_identity = true;
    for (int trial = 0; trial < 100; ++trial) {
      Idx a = static_cast<Idx>(rng() % loop.order());
      Idx b = static_cast<Idx>(rng() % loop.order());
      Idx c = static_cast<Idx>(rng() % loop.order());
      std::vector<Idx> pg{a, b}, ng{c};
      Subloop p = generated_subloop(loop, pg);
      Subloop n = normal_closure(loop, ng);
      Subloop join = subloop_join(p, n);
      Subloop meet = subloop_intersection(p, n);
      if (join.size() * meet.size() != p.size() * n.size())
        index_identity = false;
    }
    expect(out, index_identity, tag + "index identity fails");

    if (loop.order() <= 24) {
      std::vector<std::vector<Idx>> brute = oracles::brute_subloops(loop);
      bool same_sets = brute.size() == subs.size();
      if (same_sets)
        for (std::size_t i = 0; i < brute.size(); ++i)
          if (subs[i].elements() != brute[i]) same_sets = false;
      expect(out, same_sets, tag + "enumeration disagrees with brute force");

      bool normality_agrees = true;
      for (const std::vector<Idx>& elems : brute) {
        Subloop sub(Subloop::unchecked, loop, elems);
        if (is_normal(loop, sub) != oracles::oracle_is_normal(loop, elems))
          normality_agrees = false;
      }
      expect(out, normality_agrees, tag + "normality disagrees with oracle");

      bool closure_agrees = true;
      for (Idx a = 0; a < loop.order(); ++a)
        for (Idx b = a; b < loop.order(); ++b) {
          std::vector<Idx> gens{a, b};
          Subloop sub = generated_subloop(loop, gens);
          if (sub.elements() != oracles::oracle_closure(loop, gens))
            closure_agrees = false;
        }
      expect(out, closure_agrees, tag + "closure disagrees with oracle");
    }

    Subloop gtr = group_type_radical(loop);
    Subloop meet_all = whole_subloop(loop);
    for (std::int64_t p : primes_of(loop.order())) {
      Subloop rad = gr_p(loop, p);
      expect(out, is_normal(loop, rad),
             tag + "p-radical is not normal at p=" + num(p));
      QuotientResult q = quotient(loop, rad);
      bool torsion_free = true;
      for (Idx x = 0; x < q.loop.order(); ++x)
        if (q.loop.element_order(x) % p == 0) torsion_free = false;
      expect(out, torsion_free,
             tag + "quotient keeps p-torsion at p=" + num(p));
      bool swallows = true;
      for (const Subloop& sub : enumerate_p_subloops(loop, p))
        for (Idx x : sub.elements())
          if (!rad.contains(x)) swallows = false;
      expect(out, swallows,
             tag + "a p-subloop escapes the radical at p=" + num(p));
      FiniteLoop inner = extract_subloop(loop, rad);
      Subloop inner_gtr = group_type_radical(inner);
      std::vector<Idx> mapped;
      for (Idx x : inner_gtr.elements()) mapped.push_back(rad.elements()[x]);
      std::sort(mapped.begin(), mapped.end());
      expect(out, mapped == gtr.elements(),
             tag + "radical is not stable under restriction at p=" + num(p));
      meet_all = subloop_intersection(meet_all, rad);
    }
    expect(out, meet_all.elements() == gtr.elements(),
           tag + "intersection of p-radicals misses the radical");
  }
}

struct Scenario {
  const char* name;
  double limit_seconds;  // 0 means unbounded
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Scenario> scenarios = {
      {"paige2-basics", 5.0, scenario_paige2_basics},
      {"paige2-sylow-verdicts", 120.0, scenario_paige2_sylow},
      {"paige3-sylow-subloops", 600.0, scenario_paige3_sylow},
      {"paige3-hat-series", 900.0, scenario_paige3_hat_series},
      {"paige2-multiplication-group", 60.0, scenario_paige2_mlt},
      {"triality-archetypes", 120.0, scenario_triality_archetypes},
      {"rho-extension-agreement", 0.0, scenario_rho_extension},
      {"inner-s3-sylow-descent", 0.0, scenario_inner_s3},
      {"module-catalog", 1.0, scenario_module_catalog},
      {"chein-doubles", 0.0, scenario_chein_doubles},
      {"algebraic-properties", 0.0, scenario_properties},
  };

  int failed = 0;
  for (const Scenario& s : scenarios) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.body(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (s.limit_seconds > 0 && elapsed >= s.limit_seconds)
      out.failures.push_back("took " + std::to_string(elapsed) +
                             "s, limit " + std::to_string(s.limit_seconds) +
                             "s");
    const bool pass = out.failures.empty();
    std::printf("%s %-28s %8.2fs\n", pass ? "PASS" : "FAIL", s.name, elapsed);
    for (const std::string& why : out.failures)
      std::printf("     - %s\n", why.c_str());
    if (!pass) ++failed;
  }
  std::printf("%d/%zu scenarios passed\n",
              static_cast<int>(scenarios.size()) - failed, scenarios.size());
  return failed == 0 ? 0 : 1;
}
