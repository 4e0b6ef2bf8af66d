#include "core/tree.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

namespace mans {

namespace {

using i64 = std::int64_t;

std::string joined_gens(const Generators& s) {
  std::string out;
  for (i64 v : s.elems()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

void require_mans(const Generators& s, const char* who) {
  if (!is_mans(s).is_mans)
    fail(Errc::not_mans,
         std::string(who) + " requires a semigroup with monotone Apery set, "
                            "but <" + joined_gens(s) + "> is not one");
}

}  // namespace

std::vector<i64> suitably_monotone_elements(const Generators& s) {
  if (s.embedding_dim() < 2)
    fail(Errc::invalid_argument,
         "suitably monotone elements need at least two minimal generators");
  require_mans(s, "suitably_monotone_elements");

  const i64 m = s.multiplicity();
  const AperyTable ap = apery_set(s, m);
  std::vector<i64> out;
  // Candidates with residue j live in the open window (w(j-1), w(j)) and are
  // congruent with w(j); only residues above M(S) mod m qualify, and there
  // everything in the window automatically exceeds M(S).
  for (i64 j = s.max_generator() % m + 1; j <= m - 1; ++j) {
    const i64 kmax = (ap.w[j] - ap.w[j - 1] - 1) / m;
    for (i64 k = kmax; k >= 1; --k) out.push_back(ap.w[j] - k * m);
  }
  return out;
}

std::vector<Generators> children_of(const Generators& s) {
  std::vector<Generators> out;
  for (i64 n : suitably_monotone_elements(s)) {
    std::vector<i64> raw = s.elems();
    raw.push_back(n);
    Generators child = Generators::from_raw(std::move(raw));
    if (child.embedding_dim() != s.embedding_dim() + 1 || !is_mans(child).is_mans)
      fail(Errc::internal,
           "adjoining " + std::to_string(n) + " to <" + joined_gens(s) +
               "> did not produce a monotone extension");
    out.push_back(std::move(child));
  }
  return out;
}

i64 child_count(const Generators& s) {
  require_mans(s, "child_count");
  const i64 count =
      floor_div(checked_sub(frobenius(s), s.max_generator()), s.multiplicity()) + 1;
  return count < 0 ? 0 : count;
}

Generators parent_of(const Generators& s) {
  require_mans(s, "parent_of");
  if (s.embedding_dim() == 2)
    fail(Errc::is_root, "<" + joined_gens(s) + "> is the root of its family");
  if (s.embedding_dim() < 2)
    fail(Errc::invalid_argument, "parent needs at least two minimal generators");
  std::vector<i64> head(s.elems().begin(), s.elems().end() - 1);
  return Generators::from_raw(std::move(head));
}

MansTree build_tree(i64 m, i64 r, std::optional<i64> max_depth) {
  if (m < 2) fail(Errc::invalid_argument, "multiplicity must be at least 2");
  if (r <= m) fail(Errc::invalid_argument, "ratio must exceed the multiplicity");

  MansTree tree;
  tree.m = m;
  tree.r = r;
  if (r % m != 1) return tree;  // MA(m,r) is empty off the residue class 1

  tree.nodes.push_back(TreeNode{Generators::from_raw({m, r}), 0, std::nullopt, {}});
  for (std::size_t head = 0; head < tree.nodes.size(); ++head) {
    if (max_depth && tree.nodes[head].depth >= *max_depth) continue;
    const i64 depth = tree.nodes[head].depth;
    for (Generators& child : children_of(tree.nodes[head].semigroup)) {
      tree.nodes[head].children.push_back(tree.nodes.size());
      tree.nodes.push_back(TreeNode{std::move(child), depth + 1, head, {}});
    }
  }
  return tree;
}

std::string export_dot(const MansTree& tree) {
  std::ostringstream out;
  out << "digraph mans_tree {\n  rankdir=LR;\n";
  for (const TreeNode& node : tree.nodes) {
    const std::string id = joined_gens(node.semigroup);
    out << "  \"" << id << "\" [label=\"⟨" << id << "⟩\"];\n";
  }
  for (const TreeNode& node : tree.nodes) {
    const std::string id = joined_gens(node.semigroup);
    for (std::size_t c : node.children) {
      const Generators& child = tree.nodes[c].semigroup;
      out << "  \"" << id << "\" -> \"" << joined_gens(child) << "\" [label=\""
          << child.max_generator() % tree.m << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const MansTree& tree) {
  nlohmann::json doc;
  doc["m"] = tree.m;
  doc["r"] = tree.r;
  doc["vertex_count"] = tree.nodes.size();
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    nlohmann::json entry;
    entry["id"] = i;
    entry["gens"] = node.semigroup.elems();
    if (node.parent)
      entry["parent"] = *node.parent;
    else
      entry["parent"] = nullptr;
    entry["frobenius"] = frobenius(node.semigroup);
    entry["genus"] = genus(node.semigroup);
    entry["children"] = node.children;
    doc["nodes"].push_back(std::move(entry));
  }
  return doc.dump() + "\n";
}

MansTree tree_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, std::string("tree JSON does not parse: ") + e.what());
  }
  try {
    MansTree tree;
    tree.m = doc.at("m").get<i64>();
    tree.r = doc.at("r").get<i64>();
    const auto& nodes = doc.at("nodes");
    if (doc.at("vertex_count").get<std::size_t>() != nodes.size())
      fail(Errc::invalid_argument, "vertex_count does not match the node list");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& entry = nodes[i];
      if (entry.at("id").get<std::size_t>() != i)
        fail(Errc::invalid_argument, "node ids must be dense and in order");
      TreeNode node{Generators::from_raw(entry.at("gens").get<std::vector<i64>>()),
                    0, std::nullopt,
                    entry.at("children").get<std::vector<std::size_t>>()};
      if (!entry.at("parent").is_null()) {
        const auto p = entry.at("parent").get<std::size_t>();
        if (p >= i) fail(Errc::invalid_argument, "parent must precede its child");
        node.parent = p;
        node.depth = tree.nodes[p].depth + 1;
      }
      if (entry.at("frobenius").get<i64>() != frobenius(node.semigroup) ||
          entry.at("genus").get<i64>() != genus(node.semigroup))
        fail(Errc::invalid_argument, "recorded invariants disagree with the generators");
      tree.nodes.push_back(std::move(node));
    }
    return tree;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, std::string("tree JSON has a bad shape: ") + e.what());
  }
}

}  // namespace mans
