#include "core/verify.hpp"

#include <algorithm>

#include "core/oracle.hpp"
#include "core/tree.hpp"

namespace mans::verify {

namespace {

using i64 = std::int64_t;

std::string describe(const Mans3Params& p, const std::string& what) {
  return "m=" + std::to_string(p.m) + " a=" + std::to_string(p.a) +
         " b=" + std::to_string(p.b) + " t=" + std::to_string(p.t) + ": " + what;
}

std::string describe_pair(i64 m, i64 r, const std::string& what) {
  return "(m=" + std::to_string(m) + ", r=" + std::to_string(r) + "): " + what;
}

void check(SweepResult& res, bool ok, const std::string& detail) {
  ++res.cases;
  if (!ok && res.mismatches++ == 0) res.first_counterexample = detail;
}

// Families MA(m, am+1) small enough for the exhaustive oracle.
template <typename Fn>
void for_each_family(SweepResult& res, i64 max_m, i64 max_a, i64 max_gaps, Fn fn) {
  for (i64 m = 2; m <= max_m; ++m) {
    for (i64 a = 1; a <= max_a; ++a) {
      const i64 r = a * m + 1;
      if ((m - 1) * (r - 1) / 2 > max_gaps) {
        ++res.skipped;
        continue;
      }
      fn(m, r);
    }
  }
}

}  // namespace

std::vector<Mans3Params> admissible_e3_params(i64 max_m, i64 max_a) {
  std::vector<Mans3Params> out;
  for (i64 m = 3; m <= max_m; ++m) {
    for (i64 a = 1; a <= max_a; ++a) {
      const i64 n2 = a * m + 1;
      for (i64 t = 2; t <= m - 1; ++t) {
        const i64 lo = std::max<i64>(floor_div((t - 1) * n2 - t, m) + 1, 1);
        const i64 hi = t * a - 1;
        for (i64 b = lo; b <= hi; ++b)
          out.push_back(Mans3Params::create(m, a, b, t));
      }
    }
  }
  return out;
}

SweepResult e3_formulas(i64 max_m, i64 max_a) {
  SweepResult res;
  for (const Mans3Params& p : admissible_e3_params(max_m, max_a)) {
    const Generators s = mans3_from_params(p);
    check(res, mans3_apery(p) == apery_set(s, p.m), describe(p, "Apery table"));
    check(res, mans3_frobenius(p) == frobenius(s), describe(p, "Frobenius number"));
    check(res, mans3_genus(p) == genus(s), describe(p, "genus"));
    check(res, mans3_pseudo_frobenius(p) == pseudo_frobenius(s),
          describe(p, "pseudo-Frobenius set"));
  }
  return res;
}

SweepResult pf_vs_oracle(i64 max_m, i64 max_a) {
  SweepResult res;
  for (const Mans3Params& p : admissible_e3_params(max_m, max_a)) {
    const Generators s = mans3_from_params(p);
    check(res, mans3_pseudo_frobenius(p) == oracle::oracle_pf(s.elems()),
          describe(p, "pseudo-Frobenius set vs oracle"));
  }
  return res;
}

SweepResult tree_vs_oracle(i64 max_m, i64 max_a, i64 max_gaps) {
  SweepResult res;
  for_each_family(res, max_m, max_a, max_gaps, [&](i64 m, i64 r) {
    const MansTree tree = build_tree(m, r);
    std::vector<Generators> vertices;
    for (const TreeNode& node : tree.nodes) vertices.push_back(node.semigroup);
    std::sort(vertices.begin(), vertices.end());
    check(res, vertices == oracle::oracle_enumerate_MA(m, r, max_gaps),
          describe_pair(m, r, "vertex set vs oracle"));
    for (const TreeNode& node : tree.nodes) {
      check(res,
            child_count(node.semigroup) ==
                static_cast<i64>(node.children.size()),
            describe_pair(m, r, "child-count formula at <..." +
                                    std::to_string(node.semigroup.max_generator()) +
                                    ">"));
      if (node.semigroup.max_generator() % m < m - 1) {
        const auto elems = suitably_monotone_elements(node.semigroup);
        check(res,
              std::find(elems.begin(), elems.end(),
                        node.semigroup.max_generator() + 1) != elems.end(),
              describe_pair(m, r, "successor M(S)+1 missing"));
      }
    }
  });
  return res;
}

SweepResult apery_extend(i64 max_m, i64 max_a, i64 max_gaps) {
  SweepResult res;
  for_each_family(res, max_m, max_a, max_gaps, [&](i64 m, i64 r) {
    const MansTree tree = build_tree(m, r);
    for (const TreeNode& node : tree.nodes) {
      const AperyTable parent_table = apery_set(node.semigroup, m);
      for (std::size_t c : node.children) {
        const Generators& child = tree.nodes[c].semigroup;
        check(res,
              extend_apery(parent_table, child.max_generator()) ==
                  apery_set(child, m),
              describe_pair(m, r, "incremental Apery table for <..." +
                                      std::to_string(child.max_generator()) + ">"));
      }
    }
  });
  return res;
}

}  // namespace mans::verify
