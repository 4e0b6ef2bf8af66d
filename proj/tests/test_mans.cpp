#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "core/monotone.hpp"
#include "core/oracle.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"

using mans::AperyTable;
using mans::Errc;
using mans::Generators;
using mans::Irreducibility;
using mans::Mans3Params;
using mans::SemigroupError;

namespace {

using i64 = std::int64_t;

Generators gens(std::vector<i64> v) { return Generators::from_raw(std::move(v)); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SemigroupError& e) {
    return e.code();
  }
  FAIL("expected a SemigroupError");
  return Errc::internal;
}

}  // namespace

TEST_CASE("is_mans on the worked examples") {
  CHECK(mans::is_mans(gens({5, 6, 13})).is_mans);
  CHECK(mans::is_mans(gens({10, 11, 23})).is_mans);
  CHECK(mans::is_mans(gens({5, 11, 17})).is_mans);
  CHECK(mans::is_mans(gens({2, 3})).is_mans);
  CHECK(mans::is_mans(gens({1})).is_mans);  // vacuous
}

TEST_CASE("is_mans failure reports") {
  // Ratio 7 is not 5a+1, and the Apery table drops right after index 1.
  const auto bad_ratio = mans::is_mans(gens({5, 7, 9}));
  CHECK(!bad_ratio.is_mans);
  CHECK(bad_ratio.failing_index == 1);
  CHECK(!bad_ratio.ratio_coefficient.has_value());

  // Ratio has the right form but w(3)=18 > w(4)=14.
  const auto bad_window = mans::is_mans(gens({5, 6, 14}));
  CHECK(!bad_window.is_mans);
  CHECK(bad_window.failing_index == 3);
  CHECK(bad_window.ratio_coefficient == 1);
}

TEST_CASE("residues_monotone") {
  CHECK(mans::residues_monotone(gens({5, 6, 13})));
  CHECK(mans::residues_monotone(gens({5, 11, 17})));
  CHECK(!mans::residues_monotone(gens({5, 7, 11})));
}

TEST_CASE("is_mans_dim2") {
  CHECK(mans::is_mans_dim2(5, 6));
  CHECK(mans::is_mans_dim2(5, 11));
  CHECK(!mans::is_mans_dim2(3, 5));
  CHECK(code_of([] { mans::is_mans_dim2(4, 6); }) == Errc::gcd_not_one);
  CHECK(code_of([] { mans::is_mans_dim2(1, 3); }) == Errc::invalid_argument);
}

TEST_CASE("mans3_params extraction") {
  const Mans3Params a = mans::mans3_params(gens({5, 6, 13}));
  CHECK(a.m == 5);
  CHECK(a.a == 1);
  CHECK(a.b == 2);
  CHECK(a.t == 3);
  CHECK(a.q == 1);
  CHECK(a.r == 1);

  const Mans3Params b = mans::mans3_params(gens({10, 11, 23}));
  CHECK(b.m == 10);
  CHECK(b.a == 1);
  CHECK(b.b == 2);
  CHECK(b.t == 3);

  const Mans3Params c = mans::mans3_params(gens({5, 11, 28}));
  CHECK(c.m == 5);
  CHECK(c.a == 2);
  CHECK(c.b == 5);
  CHECK(c.t == 3);
}

TEST_CASE("mans3_params rejections") {
  CHECK(code_of([] { mans::mans3_params(gens({5, 6})); }) ==
        Errc::not_embedding_dim_3);
  CHECK(code_of([] { mans::mans3_params(gens({5, 7, 9})); }) == Errc::not_mans);
  // Ratio form holds but the chain fails: <7,8,11> has t=4 yet 11 < 3*8.
  CHECK(code_of([] { mans::mans3_params(gens({7, 8, 11})); }) == Errc::not_mans);
  CHECK(!mans::is_mans(gens({7, 8, 11})).is_mans);
}

TEST_CASE("mans3_from_params") {
  CHECK(mans::mans3_from_params(Mans3Params::create(5, 1, 2, 3)).elems() ==
        std::vector<i64>{5, 6, 13});
  CHECK(mans::mans3_from_params(Mans3Params::create(6, 1, 2, 3)).elems() ==
        std::vector<i64>{6, 7, 15});
  // bm+t = 9 sits below (t-1)(am+1) = 18, violating the chain.
  CHECK(code_of([] { Mans3Params::create(5, 1, 1, 4); }) == Errc::invalid_params);
  CHECK(code_of([] { Mans3Params::create(2, 1, 1, 2); }) == Errc::invalid_params);
  CHECK(code_of([] { Mans3Params::create(5, 1, 2, 5); }) == Errc::invalid_params);
}

TEST_CASE("mans3_apery closed form") {
  CHECK(mans::mans3_apery(Mans3Params::create(5, 1, 2, 3)).w ==
        std::vector<i64>{0, 6, 12, 13, 19});
  CHECK(mans::mans3_apery(Mans3Params::create(10, 1, 2, 3)).w ==
        std::vector<i64>{0, 11, 22, 23, 34, 45, 46, 57, 68, 69});
  CHECK(mans::mans3_apery(Mans3Params::create(13, 2, 4, 3)).w ==
        std::vector<i64>{0, 27, 54, 55, 82, 109, 110, 137, 164, 165, 192, 219, 220});
}

TEST_CASE("mans3_frobenius closed form") {
  CHECK(mans::mans3_frobenius(Mans3Params::create(5, 1, 2, 3)) == 14);
  CHECK(mans::mans3_frobenius(Mans3Params::create(7, 2, 2, 2)) == 41);
  // <3,4,5>: the only gaps are 1 and 2.
  CHECK(mans::oracle::oracle_gaps({3, 4, 5}) == std::vector<i64>{1, 2});
  CHECK(mans::mans3_frobenius(Mans3Params::create(3, 1, 1, 2)) == 2);
}

TEST_CASE("mans3_genus closed form, both published shapes") {
  CHECK(mans::mans3_genus(Mans3Params::create(5, 1, 2, 3)) == 8);
  CHECK(mans::mans3_genus(Mans3Params::create(10, 1, 2, 3)) == 33);
  // <7,15,16> has 24 gaps (Apery sum 189 over modulus 7, minus 3).
  CHECK(mans::oracle::oracle_gaps({7, 15, 16}).size() == 24);
  CHECK(mans::mans3_genus(Mans3Params::create(7, 2, 2, 2)) == 24);
}

TEST_CASE("mans3_pseudo_frobenius closed form") {
  CHECK(mans::mans3_pseudo_frobenius(Mans3Params::create(6, 1, 2, 3)) ==
        std::vector<i64>{23});
  CHECK(mans::mans3_pseudo_frobenius(Mans3Params::create(5, 1, 2, 3)) ==
        std::vector<i64>{7, 14});
  CHECK(mans::mans3_pseudo_frobenius(Mans3Params::create(5, 2, 3, 2)) ==
        std::vector<i64>{23, 29});
}

TEST_CASE("mans3 symmetry criteria") {
  CHECK(mans::mans3_is_symmetric(Mans3Params::create(6, 1, 2, 3)));
  CHECK(!mans::mans3_is_symmetric(Mans3Params::create(5, 1, 2, 3)));
  CHECK(!mans::mans3_is_symmetric(Mans3Params::create(5, 2, 3, 2)));

  CHECK(mans::mans3_is_pseudo_symmetric(Mans3Params::create(5, 2, 5, 3)));
  CHECK(!mans::mans3_is_pseudo_symmetric(Mans3Params::create(5, 1, 3, 4)));
  CHECK(!mans::mans3_is_pseudo_symmetric(Mans3Params::create(5, 2, 4, 3)));
}

TEST_CASE("pseudo-Frobenius containment window") {
  // q(bm+t)+r(am+1)-m always belongs to PF(S), and PF(S) never leaves the
  // two-element superset with (q-1)(bm+t)+(t-1)(am+1)-m.
  for (const Mans3Params& p : mans::verify::admissible_e3_params(10, 3)) {
    const auto pf = mans::pseudo_frobenius(mans::mans3_from_params(p));
    const i64 hi = p.q * p.n3() + p.r * p.n2() - p.m;
    const i64 lo = (p.q - 1) * p.n3() + (p.t - 1) * p.n2() - p.m;
    CHECK(std::find(pf.begin(), pf.end(), hi) != pf.end());
    for (i64 x : pf) CHECK((x == hi || x == lo));
  }
}

TEST_CASE("type is one exactly when t divides m, and matches symmetry") {
  for (const Mans3Params& p : mans::verify::admissible_e3_params(9, 3)) {
    const Generators s = mans::mans3_from_params(p);
    const i64 type = mans::type_of(s);
    CHECK((type == 1 || type == 2));
    CHECK((type == 1) == (p.m % p.t == 0));
    CHECK((mans::classify_irreducible(s) == Irreducibility::symmetric) ==
          (type == 1));
  }
}

TEST_CASE("is_mans_recursive on worked examples") {
  CHECK(mans::is_mans_recursive(gens({13, 27, 55, 96})));
  CHECK(mans::is_mans_recursive(gens({5, 6, 13})));
  CHECK(!mans::is_mans_recursive(gens({5, 6, 14})));
  CHECK(mans::is_mans_recursive(gens({1})));
  CHECK(mans::is_mans_recursive(gens({2, 3})));
}

TEST_CASE("is_mans_recursive agrees with the direct definition") {
  // The e=3 sweep, every vertex of two tree families, and a seeded random
  // sample over small generator sets.
  for (const Mans3Params& p : mans::verify::admissible_e3_params(10, 3)) {
    const Generators s = mans::mans3_from_params(p);
    CHECK(mans::is_mans(s).is_mans == mans::is_mans_recursive(s));
  }
  for (auto [m, r] : {std::pair<i64, i64>{5, 11}, {6, 7}}) {
    for (const auto& node : mans::build_tree(m, r).nodes)
      CHECK(mans::is_mans(node.semigroup).is_mans ==
            mans::is_mans_recursive(node.semigroup));
  }
  std::mt19937_64 rng(0xA5EED);
  std::uniform_int_distribution<i64> value(2, 200);
  std::uniform_int_distribution<int> count(2, 5);
  int accepted = 0;
  while (accepted < 400) {
    std::vector<i64> raw;
    for (int k = count(rng); k > 0; --k) raw.push_back(value(rng));
    i64 g = 0;
    for (i64 v : raw) g = std::gcd(g, v);
    if (g != 1) continue;
    const Generators s = gens(raw);
    if (s.multiplicity() > 12) continue;
    ++accepted;
    CHECK(mans::is_mans(s).is_mans == mans::is_mans_recursive(s));
  }
}

TEST_CASE("every MANS-semigroup has monotone generator residues") {
  for (const Mans3Params& p : mans::verify::admissible_e3_params(10, 3))
    CHECK(mans::residues_monotone(mans::mans3_from_params(p)));
  for (const auto& node : mans::build_tree(5, 11).nodes)
    CHECK(mans::residues_monotone(node.semigroup));
}

TEST_CASE("dropping the greatest generator preserves monotonicity") {
  for (auto [m, r] : {std::pair<i64, i64>{5, 6}, {5, 11}, {6, 7}}) {
    for (const auto& node : mans::build_tree(m, r).nodes) {
      if (node.semigroup.embedding_dim() < 3) continue;
      std::vector<i64> head(node.semigroup.elems().begin(),
                            node.semigroup.elems().end() - 1);
      const Generators peeled = gens(head);
      CHECK(peeled.embedding_dim() == node.semigroup.embedding_dim() - 1);
      CHECK(mans::is_mans(peeled).is_mans);
    }
  }
}

TEST_CASE("extend_apery reproduces the worked tables") {
  const AperyTable s3 = mans::apery_set(gens({13, 27, 55}), 13);
  CHECK(mans::extend_apery(s3, 96).w ==
        std::vector<i64>{0, 27, 54, 55, 82, 96, 110, 137, 151, 165, 192, 206, 220});

  const AperyTable root = mans::apery_set(gens({5, 6}), 5);
  CHECK(root.w == std::vector<i64>{0, 6, 12, 18, 24});
  CHECK(mans::extend_apery(root, 13).w == std::vector<i64>{0, 6, 12, 13, 19});

  const AperyTable mid = mans::apery_set(gens({5, 6, 13}), 5);
  CHECK(mans::extend_apery(mid, 14).w == std::vector<i64>{0, 6, 12, 13, 14});
}

TEST_CASE("extend_apery enforces the suitably monotone window") {
  const AperyTable root = mans::apery_set(gens({5, 6}), 5);
  // Residue 1 does not exceed the residue of the greatest generator 6.
  CHECK(code_of([&] { mans::extend_apery(root, 11); }) ==
        Errc::not_suitably_monotone);
  // 17 lies above w(2) = 12, outside the window.
  CHECK(code_of([&] { mans::extend_apery(root, 17); }) ==
        Errc::not_suitably_monotone);
  // 7 is below the greatest generator... of <5,6,13>.
  const AperyTable mid = mans::apery_set(gens({5, 6, 13}), 5);
  CHECK(code_of([&] { mans::extend_apery(mid, 7); }) ==
        Errc::not_suitably_monotone);
  // A non-monotone table is rejected before the window check.
  const AperyTable skew = mans::apery_set(gens({5, 6, 14}), 5);
  CHECK(code_of([&] { mans::extend_apery(skew, 19); }) == Errc::not_mans);
  // Garbage that is no Apery table at all.
  AperyTable fake = root;
  fake.w[2] = 22;  // least element congruent with 2 is 12
  CHECK(code_of([&] { mans::extend_apery(fake, 13); }) == Errc::invalid_argument);
}

TEST_CASE("extend_apery equals the direct table on every tree edge") {
  for (auto [m, r] : {std::pair<i64, i64>{5, 6}, {5, 11}, {7, 15}}) {
    const auto tree = mans::build_tree(m, r);
    for (const auto& node : tree.nodes) {
      const AperyTable parent_table = mans::apery_set(node.semigroup, m);
      for (std::size_t c : node.children) {
        const Generators& child = tree.nodes[c].semigroup;
        const AperyTable extended =
            mans::extend_apery(parent_table, child.max_generator());
        CHECK(extended == mans::apery_set(child, m));
        CHECK(extended.monotone());
      }
    }
  }
}

TEST_CASE("formula sweep comes back clean") {
  const auto res = mans::verify::e3_formulas(9, 3);
  CHECK(res.cases > 0);
  CHECK(res.mismatches == 0);
  const auto pf = mans::verify::pf_vs_oracle(8, 2);
  CHECK(pf.cases > 0);
  CHECK(pf.mismatches == 0);
}

TEST_CASE("make_profile bundles the invariants") {
  const auto p = mans::make_profile(gens({5, 6, 13}));
  CHECK(p.frobenius == 14);
  CHECK(p.genus == 8);
  CHECK(p.pf == std::vector<i64>{7, 14});
  CHECK(p.type_count == 2);
  CHECK(p.is_mans);
  CHECK(p.irreducibility == Irreducibility::pseudo_symmetric);

  const auto n = mans::make_profile(gens({1}));
  CHECK(n.frobenius == -1);
  CHECK(n.genus == 0);
  CHECK(n.pf.empty());
  CHECK(n.type_count == 0);
  CHECK(n.is_mans);
  CHECK(n.irreducibility == Irreducibility::symmetric);
}
