// Acceptance suite: seven integration criteria, one pass/fail line each.
// Every comparison is exact integer equality. Exits nonzero if any fails.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/monotone.hpp"
#include "core/oracle.hpp"
#include "core/semigroup.hpp"
#include "core/tree.hpp"
#include "core/verify.hpp"

namespace {

using i64 = std::int64_t;
using mans::AperyTable;
using mans::Generators;
using mans::Irreducibility;
using mans::Mans3Params;
using mans::MansTree;
using mans::TreeNode;

// Oracle search limit for the tree criteria: <7,15> has 42 gaps, above the
// default of 24.
constexpr i64 kOracleGapLimit = 48;

struct Criterion {
  int checks = 0;
  int failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

Generators gens(std::vector<i64> v) { return Generators::from_raw(std::move(v)); }

std::string fmt_gens(const Generators& s) {
  std::string out = "<";
  for (i64 v : s.elems()) out += (out.size() == 1 ? "" : ",") + std::to_string(v);
  return out + ">";
}

// --- criterion 1: golden values from the worked examples -------------------

void criterion_golden(Criterion& c) {
  const auto table = [](std::vector<i64> g, i64 n) {
    return mans::apery_set(Generators::from_raw(std::move(g)), n).w;
  };
  c.expect(table({5, 6, 13}, 5) == std::vector<i64>{0, 6, 12, 13, 19},
           "Ap(<5,6,13>,5)");
  c.expect(mans::frobenius(gens({5, 6, 13})) == 14, "F(<5,6,13>)");
  c.expect(mans::genus(gens({5, 6, 13})) == 8, "g(<5,6,13>)");
  c.expect(mans::pseudo_frobenius(gens({5, 6, 13})) == std::vector<i64>{7, 14},
           "PF(<5,6,13>)");

  c.expect(table({10, 11, 23}, 10) ==
               std::vector<i64>{0, 11, 22, 23, 34, 45, 46, 57, 68, 69},
           "Ap(<10,11,23>,10)");
  c.expect(mans::genus(gens({10, 11, 23})) == 33, "g(<10,11,23>)");
  c.expect(mans::pseudo_frobenius(gens({10, 11, 23})) == std::vector<i64>{58, 59},
           "PF(<10,11,23>)");

  c.expect(mans::pseudo_frobenius(gens({6, 7, 15})) == std::vector<i64>{23},
           "PF(<6,7,15>)");
  c.expect(mans::type_of(gens({6, 7, 15})) == 1, "t(<6,7,15>)");
  c.expect(mans::pseudo_frobenius(gens({5, 6, 19})) == std::vector<i64>{13, 14},
           "PF(<5,6,19>)");
  c.expect(mans::pseudo_frobenius(gens({5, 11, 17})) == std::vector<i64>{23, 29},
           "PF(<5,11,17>)");
  c.expect(mans::pseudo_frobenius(gens({5, 11, 23})) == std::vector<i64>{17, 29},
           "PF(<5,11,23>)");
  c.expect(mans::pseudo_frobenius(gens({5, 11, 28})) == std::vector<i64>{17, 34},
           "PF(<5,11,28>)");
  c.expect(mans::classify_irreducible(gens({5, 11, 28})) ==
               Irreducibility::pseudo_symmetric,
           "<5,11,28> pseudo-symmetric");

  c.expect(table({13, 27, 55}, 13) ==
               std::vector<i64>{0, 27, 54, 55, 82, 109, 110, 137, 164, 165,
                                192, 219, 220},
           "Ap(<13,27,55>,13)");
  c.expect(table({13, 27, 55, 96}, 13) ==
               std::vector<i64>{0, 27, 54, 55, 82, 96, 110, 137, 151, 165,
                                192, 206, 220},
           "Ap(<13,27,55,96>,13)");

  c.expect(mans::frobenius(gens({5, 11})) == 39, "F(<5,11>)");
  c.expect(mans::frobenius(gens({7, 15, 16})) == 41, "F(<7,15,16>)");
}

// --- criterion 2: the two published family trees ---------------------------

void criterion_figures(Criterion& c) {
  const MansTree small = mans::build_tree(5, 6);
  const std::vector<std::vector<i64>> small_vertices = {
      {5, 6},       {5, 6, 7},     {5, 6, 13},   {5, 6, 19},
      {5, 6, 7, 8}, {5, 6, 13, 14}, {5, 6, 7, 8, 9}};
  c.expect(small.nodes.size() == 7, "MA(5,6) has 7 vertices");
  for (std::size_t i = 0; i < small.nodes.size() && i < 7; ++i)
    c.expect(small.nodes[i].semigroup.elems() == small_vertices[i],
             "MA(5,6) vertex " + std::to_string(i));

  // Edges with their residue labels: (parent, child, new generator mod m).
  struct Edge {
    std::vector<i64> parent, child;
    i64 label;
  };
  const std::vector<Edge> edges = {
      {{5, 6}, {5, 6, 7}, 2},          {{5, 6}, {5, 6, 13}, 3},
      {{5, 6}, {5, 6, 19}, 4},         {{5, 6, 7}, {5, 6, 7, 8}, 3},
      {{5, 6, 13}, {5, 6, 13, 14}, 4}, {{5, 6, 7, 8}, {5, 6, 7, 8, 9}, 4}};
  std::size_t edge_count = 0;
  for (const TreeNode& node : small.nodes) edge_count += node.children.size();
  c.expect(edge_count == 6, "MA(5,6) has 6 edges");
  for (const Edge& e : edges) {
    bool present = false;
    for (const TreeNode& node : small.nodes) {
      if (node.semigroup.elems() != e.parent) continue;
      for (std::size_t child : node.children) {
        const Generators& cg = small.nodes[child].semigroup;
        if (cg.elems() == e.child && cg.max_generator() % 5 == e.label)
          present = true;
      }
    }
    std::ostringstream what;
    what << "edge to <";
    for (i64 v : e.child) what << v << ",";
    what << "> labelled " << e.label;
    c.expect(present, what.str());
  }

  const MansTree big = mans::build_tree(5, 11);
  c.expect(big.nodes.size() == 23, "MA(5,11) has 23 vertices");
  std::vector<std::vector<i64>> got;
  for (const TreeNode& node : big.nodes) got.push_back(node.semigroup.elems());
  std::sort(got.begin(), got.end());
  const std::vector<std::vector<i64>> expected = {
      {5, 11},
      {5, 11, 12},
      {5, 11, 12, 13},
      {5, 11, 12, 13, 14},
      {5, 11, 12, 13, 19},
      {5, 11, 12, 18},
      {5, 11, 12, 18, 19},
      {5, 11, 17},
      {5, 11, 17, 18},
      {5, 11, 17, 18, 19},
      {5, 11, 17, 18, 24},
      {5, 11, 17, 23},
      {5, 11, 17, 23, 24},
      {5, 11, 17, 23, 29},
      {5, 11, 17, 29},
      {5, 11, 23},
      {5, 11, 23, 24},
      {5, 11, 23, 29},
      {5, 11, 28},
      {5, 11, 28, 29},
      {5, 11, 28, 34},
      {5, 11, 34},
      {5, 11, 39}};
  c.expect(got == expected, "MA(5,11) vertex set");
}

// --- criterion 3: closed forms vs definitions over the full sweep ----------

void criterion_formula_sweep(Criterion& c) {
  const auto result = mans::verify::e3_formulas(12, 4);
  c.expect(result.cases > 0, "sweep is non-empty");
  c.expect(result.mismatches == 0,
           "formula sweep: " + result.first_counterexample);
  c.checks += static_cast<int>(result.cases);
}

// --- criterion 4: direct and recursive characterisations agree -------------

void criterion_characterisation(Criterion& c) {
  for (const Mans3Params& p : mans::verify::admissible_e3_params(12, 4)) {
    const Generators s = mans::mans3_from_params(p);
    c.expect(mans::is_mans(s).is_mans == mans::is_mans_recursive(s),
             "sweep member " + fmt_gens(s));
  }

  std::mt19937_64 rng(20260811);
  std::uniform_int_distribution<i64> value(2, 40);
  std::uniform_int_distribution<int> count(2, 5);
  int accepted = 0;
  while (accepted < 10000) {
    std::vector<i64> raw;
    for (int k = count(rng); k > 0; --k) raw.push_back(value(rng));
    i64 g = 0;
    for (i64 v : raw) g = std::gcd(g, v);
    if (g != 1) continue;
    const Generators s = Generators::from_raw(raw);
    if (s.multiplicity() > 12) continue;
    ++accepted;
    c.expect(mans::is_mans(s).is_mans == mans::is_mans_recursive(s),
             "random sample " + fmt_gens(s));
  }
}

// --- criteria 5 and 6: trees vs oracle, incremental Apery updates ----------

const std::vector<std::pair<i64, i64>> kFamilies = {
    {3, 4}, {4, 5}, {5, 6}, {5, 11}, {6, 7}, {7, 15}};

void criterion_tree_vs_oracle(Criterion& c) {
  for (const auto& [m, r] : kFamilies) {
    const MansTree tree = mans::build_tree(m, r);
    std::vector<Generators> vertices;
    for (const TreeNode& node : tree.nodes) vertices.push_back(node.semigroup);
    std::sort(vertices.begin(), vertices.end());
    c.expect(vertices == mans::oracle::oracle_enumerate_MA(m, r, kOracleGapLimit),
             "vertex set of MA(" + std::to_string(m) + "," + std::to_string(r) +
                 ")");
    for (const TreeNode& node : tree.nodes) {
      c.expect(mans::child_count(node.semigroup) ==
                   static_cast<i64>(node.children.size()),
               "child count at " + fmt_gens(node.semigroup));
      if (node.semigroup.max_generator() % m < m - 1) {
        const i64 successor = node.semigroup.max_generator() + 1;
        bool found = false;
        for (std::size_t child : node.children)
          if (tree.nodes[child].semigroup.max_generator() == successor)
            found = true;
        c.expect(found, "successor child at " + fmt_gens(node.semigroup));
      }
    }
  }
}

void criterion_incremental_apery(Criterion& c) {
  for (const auto& [m, r] : kFamilies) {
    const MansTree tree = mans::build_tree(m, r);
    for (const TreeNode& node : tree.nodes) {
      const AperyTable parent_table = mans::apery_set(node.semigroup, m);
      for (std::size_t child : node.children) {
        const Generators& cg = tree.nodes[child].semigroup;
        c.expect(mans::extend_apery(parent_table, cg.max_generator()) ==
                     mans::apery_set(cg, m),
                 "edge " + fmt_gens(node.semigroup) + " -> " + fmt_gens(cg));
      }
    }
  }
}

// --- criterion 7: irreducibility equivalences over the sweep ---------------

void criterion_irreducibility(Criterion& c) {
  for (const Mans3Params& p : mans::verify::admissible_e3_params(12, 4)) {
    const Generators s = mans::mans3_from_params(p);
    const i64 f = mans::frobenius(s);
    const i64 g = mans::genus(s);
    const auto pf = mans::pseudo_frobenius(s);

    const bool divides = p.m % p.t == 0;
    const bool sym_formula = f == 2 * g - 1;
    const bool sym_classified =
        mans::classify_irreducible(s) == Irreducibility::symmetric;
    c.expect(divides == sym_classified && sym_classified == sym_formula &&
                 mans::mans3_is_symmetric(p) == divides,
             "symmetric equivalences at " + fmt_gens(s));

    const bool param_condition = 2 * p.t == p.m + 1 && p.t * p.a - p.b == 1;
    const bool psym_formula = f == 2 * g - 2;
    const bool psym_pf = pf.size() == 2 && 2 * pf[0] == f && pf[1] == f;
    const bool psym_classified =
        mans::classify_irreducible(s) == Irreducibility::pseudo_symmetric;
    c.expect(param_condition == psym_classified &&
                 psym_classified == (psym_formula && psym_pf) &&
                 psym_formula == psym_pf &&
                 mans::mans3_is_pseudo_symmetric(p) == param_condition,
             "pseudo-symmetric equivalences at " + fmt_gens(s));
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {"golden worked examples", criterion_golden},
      {"family trees MA(5,6) and MA(5,11)", criterion_figures},
      {"closed forms vs definitions, m<=12, a<=4", criterion_formula_sweep},
      {"direct vs recursive monotonicity check", criterion_characterisation},
      {"trees vs exhaustive oracle", criterion_tree_vs_oracle},
      {"incremental Apery updates along tree edges", criterion_incremental_apery},
      {"irreducibility equivalences", criterion_irreducibility},
  };

  int exit_code = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    Criterion c;
    entry.run(c);
    if (c.failed == 0) {
      std::cout << "PASS criterion " << index << ": " << entry.label << " ("
                << c.checks << " checks)\n";
    } else {
      exit_code = 1;
      std::cout << "FAIL criterion " << index << ": " << entry.label << " ("
                << c.failed << " of " << c.checks
                << " checks failed; first: " << c.first_failure << ")\n";
    }
  }
  return exit_code;
}
