#include "ncat/omega.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ncat {

RootedTree::RootedTree(std::size_t edge_count, std::vector<std::pair<EdgeId, EdgeId>> covers,
                       std::vector<EdgeId> leaves)
    : edge_count_(edge_count), covers_(std::move(covers)), leaf_(edge_count, false) {
  for (EdgeId e : leaves) {
    if (e >= edge_count_) throw Error(Errc::out_of_range, "leaf edge out of range");
    leaf_[e] = true;
  }
  for (const auto& [lo, hi] : covers_) {
    if (lo >= edge_count_ || hi >= edge_count_) {
      throw Error(Errc::out_of_range, "covering pair refers to a missing edge");
    }
  }
}

RootedTree RootedTree::eta() { return RootedTree(1, {}, {0}); }

RootedTree RootedTree::from_parents(const std::vector<std::optional<EdgeId>>& parent,
                                    const std::vector<bool>& leaf) {
  std::vector<std::pair<EdgeId, EdgeId>> covers;
  std::vector<EdgeId> leaves;
  for (EdgeId e = 0; e < parent.size(); ++e) {
    if (parent[e]) covers.emplace_back(*parent[e], e);
    if (leaf.at(e)) leaves.push_back(e);
  }
  return RootedTree(parent.size(), std::move(covers), std::move(leaves));
}

std::size_t RootedTree::leaf_count() const {
  return static_cast<std::size_t>(std::count(leaf_.begin(), leaf_.end(), true));
}

std::optional<EdgeId> RootedTree::parent(EdgeId e) const {
  for (const auto& [lo, hi] : covers_) {
    if (hi == e) return lo;
  }
  return std::nullopt;
}

EdgeId RootedTree::root() const {
  for (EdgeId e = 0; e < edge_count_; ++e) {
    if (!parent(e)) return e;
  }
  throw Error(Errc::invalid_argument, "tree has no root edge");
}

std::vector<EdgeId> RootedTree::inputs(EdgeId e) const {
  std::vector<EdgeId> out;
  for (const auto& [lo, hi] : covers_) {
    if (lo == e) out.push_back(hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> RootedTree::vertices() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count_; ++e) {
    if (!leaf_[e]) out.push_back(e);
  }
  return out;
}

ValidationReport validate_tree(const RootedTree& t) {
  ValidationReport report;
  const std::size_t n = t.edge_count();
  auto edge = [](EdgeId e) { return "e" + std::to_string(e); };
  if (n == 0) {
    report.push_back({"bottom", {}, "a tree needs at least one edge"});
    return report;
  }
  // le[a][b] <=> a <= b
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (EdgeId e = 0; e < n; ++e) le[e][e] = true;
  for (const auto& [lo, hi] : t.covers()) le[lo][hi] = true;
  for (EdgeId k = 0; k < n; ++k) {
    for (EdgeId a = 0; a < n; ++a) {
      if (!le[a][k]) continue;
      for (EdgeId b = 0; b < n; ++b) {
        if (le[k][b]) le[a][b] = true;
      }
    }
  }
  for (EdgeId a = 0; a < n; ++a) {
    for (EdgeId b = a + 1; b < n; ++b) {
      if (le[a][b] && le[b][a]) report.push_back({"antisymmetry", {edge(a), edge(b)}, "cycle"});
    }
  }
  if (!report.empty()) return report;

  std::vector<EdgeId> bottoms;
  for (EdgeId b = 0; b < n; ++b) {
    bool below_all = true;
    for (EdgeId e = 0; e < n; ++e) below_all = below_all && le[b][e];
    if (below_all) bottoms.push_back(b);
  }
  if (bottoms.size() != 1) {
    Violation v{"bottom", {}, "expected a unique bottom edge"};
    for (EdgeId e = 0; e < n; ++e) {
      bool minimal = true;
      for (EdgeId y = 0; y < n; ++y) minimal = minimal && (y == e || !le[y][e]);
      if (minimal) v.witnesses.push_back(edge(e));
    }
    report.push_back(std::move(v));
  }
  for (EdgeId e = 0; e < n; ++e) {
    for (EdgeId a = 0; a < n; ++a) {
      for (EdgeId b = a + 1; b < n; ++b) {
        if (le[a][e] && le[b][e] && !le[a][b] && !le[b][a]) {
          report.push_back({"linear-downset", {edge(e), edge(a), edge(b)},
                            "incomparable edges below"});
        }
      }
    }
  }
  for (EdgeId e = 0; e < n; ++e) {
    if (!t.is_leaf(e)) continue;
    for (EdgeId y = 0; y < n; ++y) {
      if (y != e && le[e][y]) {
        report.push_back({"leaf-maximal", {edge(e), edge(y)}, "leaf is not maximal"});
        break;
      }
    }
  }
  return report;
}

FactorisationTree quotient_degenerate(const FactorisationTree& t) {
  if (t.label.dimension() >= 2 && is_identity_category(t.label)) {
    return FactorisationTree{t.label, t.tag, true, {}};
  }
  FactorisationTree out{t.label, t.tag, t.collapsed, {}};
  out.children.reserve(t.children.size());
  for (const auto& child : t.children) out.children.push_back(quotient_degenerate(child));
  return out;
}

RootedTree forget_labels(const FactorisationTree& t) {
  std::vector<std::optional<EdgeId>> parent;
  std::vector<bool> leaf;
  std::function<void(const FactorisationTree&, EdgeId)> grow = [&](const FactorisationTree& node,
                                                                    EdgeId e) {
    if (node.collapsed) {
      parent.push_back(e);
      leaf.push_back(true);
      return;
    }
    for (const auto& child : node.children) {
      const EdgeId c = parent.size();
      parent.push_back(e);
      leaf.push_back(false);
      grow(child, c);
    }
  };
  parent.push_back(std::nullopt);
  leaf.push_back(false);
  grow(t, 0);
  return RootedTree::from_parents(parent, leaf);
}

RootedTree shape(const StrictNCategory& c) {
  return forget_labels(quotient_degenerate(factorisation_tree(c)));
}

namespace {

std::string encode(const RootedTree& t, EdgeId e) {
  if (t.is_leaf(e)) return "()";
  std::vector<std::string> parts;
  for (EdgeId in : t.inputs(e)) parts.push_back(encode(t, in));
  std::sort(parts.begin(), parts.end());
  std::string out = "[";
  for (const auto& p : parts) out += p;
  return out + "]";
}

// Vertex edges of a linear tree from the root upwards.
std::vector<EdgeId> chain_of(const RootedTree& t) {
  std::vector<EdgeId> chain;
  EdgeId e = t.root();
  while (!t.is_leaf(e)) {
    chain.push_back(e);
    auto in = t.inputs(e);
    if (in.empty()) break;
    e = in.front();
  }
  return chain;
}

struct EditableTree {
  std::vector<std::optional<EdgeId>> parent;
  std::vector<bool> leaf;
  std::vector<bool> removed;

  explicit EditableTree(const RootedTree& t)
      : parent(t.edge_count()), leaf(t.edge_count()), removed(t.edge_count(), false) {
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      parent[e] = t.parent(e);
      leaf[e] = t.is_leaf(e);
    }
  }

  EdgeId add(std::optional<EdgeId> p, bool is_leaf) {
    parent.push_back(p);
    leaf.push_back(is_leaf);
    removed.push_back(false);
    return parent.size() - 1;
  }

  RootedTree finish() const {
    std::vector<EdgeId> renumber(parent.size(), 0);
    std::vector<std::optional<EdgeId>> p;
    std::vector<bool> l;
    for (EdgeId e = 0; e < parent.size(); ++e) {
      if (removed[e]) continue;
      renumber[e] = p.size();
      p.push_back(parent[e]);
      l.push_back(leaf[e]);
    }
    for (auto& q : p) {
      if (q) q = renumber[*q];
    }
    return RootedTree::from_parents(p, l);
  }
};

}  // namespace

std::string canonical_form(const RootedTree& t) { return encode(t, t.root()); }

bool trees_isomorphic(const RootedTree& a, const RootedTree& b) {
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::size_t> is_linear(const RootedTree& t) {
  const auto vs = t.vertices();
  for (EdgeId v : vs) {
    if (t.arity(v) > 1) return std::nullopt;
  }
  return vs.size();
}

RootedTree linear_face(const RootedTree& t, std::size_t i) {
  const auto n = is_linear(t);
  if (!n) throw Error(Errc::not_linear, "face maps are only defined on linear trees");
  if (i < 1 || i > *n) {
    throw Error(Errc::out_of_range, "face index " + std::to_string(i) + " outside 1.." +
                                        std::to_string(*n));
  }
  const auto chain = chain_of(t);
  EditableTree ed(t);
  const EdgeId out = chain[i - 1];
  const auto in = t.inputs(out);
  if (!in.empty()) {
    // Merge the output edge with the single input edge.
    const EdgeId x = in.front();
    for (EdgeId y : t.inputs(x)) ed.parent[y] = out;
    ed.leaf[out] = ed.leaf[x];
    ed.removed[x] = true;
  } else if (!t.parent(out)) {
    ed.leaf[out] = true;  // a lone 0-ary vertex leaves η behind
  } else {
    ed.removed[out] = true;
  }
  return ed.finish();
}

RootedTree linear_degeneracy(const RootedTree& t, std::size_t i) {
  const auto n = is_linear(t);
  if (!n) throw Error(Errc::not_linear, "degeneracy maps are only defined on linear trees");
  if (i < 1 || i > *n + 1) {
    throw Error(Errc::out_of_range, "degeneracy index " + std::to_string(i) + " outside 1.." +
                                        std::to_string(*n + 1));
  }
  const auto chain = chain_of(t);
  EditableTree ed(t);
  if (i <= *n) {
    const EdgeId out = chain[i - 1];
    const EdgeId x = ed.add(out, false);
    for (EdgeId y : t.inputs(out)) ed.parent[y] = x;
    return ed.finish();
  }
  // Above the top vertex: split the top leaf, or stack a new 0-ary vertex.
  const EdgeId top = chain.empty() ? t.root() : chain.back();
  const auto in = t.inputs(top);
  if (chain.empty()) {
    ed.leaf[top] = false;
    ed.add(top, true);
  } else if (!in.empty()) {
    ed.leaf[in.front()] = false;
    ed.add(in.front(), true);
  } else {
    ed.add(top, false);
  }
  return ed.finish();
}

nlohmann::json to_json(const RootedTree& t) {
  std::function<nlohmann::json(EdgeId)> vertex = [&](EdgeId e) {
    nlohmann::json children = nlohmann::json::array();
    std::size_t leaves = 0;
    for (EdgeId in : t.inputs(e)) {
      if (t.is_leaf(in)) {
        ++leaves;
      } else {
        children.push_back(vertex(in));
      }
    }
    return nlohmann::json{{"arity", t.arity(e)}, {"children", children}, {"leaf_edges", leaves}};
  };
  const EdgeId r = t.root();
  if (t.is_leaf(r)) return nlohmann::json{{"eta", true}};
  return vertex(r);
}

std::string to_dot(const RootedTree& t) {
  std::ostringstream out;
  out << "digraph shape {\n  rankdir=TB;\n";
  const EdgeId r = t.root();
  out << "  e_root [shape=point];\n";
  if (t.is_leaf(r)) {
    out << "  e_top [shape=point];\n  e_root -> e_top [dir=none];\n}\n";
    return out.str();
  }
  for (EdgeId v : t.vertices()) out << "  v" << v << " [shape=circle,label=\"\"];\n";
  out << "  e_root -> v" << r << " [dir=back];\n";
  for (EdgeId v : t.vertices()) {
    for (EdgeId in : t.inputs(v)) {
      if (t.is_leaf(in)) {
        out << "  e" << in << " [shape=point];\n";
        out << "  v" << v << " -> e" << in << " [dir=back];\n";
      } else {
        out << "  v" << v << " -> v" << in << " [dir=back];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ncat
