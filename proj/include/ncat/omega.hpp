#pragma once

// Finite symmetric rooted trees: a poset of edges with a unique bottom edge
// (the root), linearly ordered down-sets, and a set of marked leaves among
// the maximal edges. Every non-leaf edge e carries the vertex {e} ∪ in(e);
// a maximal non-leaf edge is a 0-ary vertex.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncat/error.hpp"
#include "ncat/factorisation.hpp"

namespace ncat {

using EdgeId = std::size_t;

class RootedTree {
 public:
  /// Arbitrary edge poset given by covering pairs (lower, upper); it is not
  /// checked here (see validate_tree).
  RootedTree(std::size_t edge_count, std::vector<std::pair<EdgeId, EdgeId>> covers,
             std::vector<EdgeId> leaves);

  static RootedTree eta();
  /// Builds a tree from a parent table (nullopt marks the root).
  static RootedTree from_parents(const std::vector<std::optional<EdgeId>>& parent,
                                 const std::vector<bool>& leaf);

  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<std::pair<EdgeId, EdgeId>>& covers() const noexcept { return covers_; }
  bool is_leaf(EdgeId e) const { return leaf_.at(e); }
  std::size_t leaf_count() const;

  // The accessors below assume a valid tree.
  EdgeId root() const;
  std::optional<EdgeId> parent(EdgeId e) const;
  /// Direct successors of e in edge order.
  std::vector<EdgeId> inputs(EdgeId e) const;
  /// Non-leaf edges, i.e. the outgoing edges of the vertices.
  std::vector<EdgeId> vertices() const;
  std::size_t vertex_count() const { return vertices().size(); }
  std::size_t arity(EdgeId vertex) const { return inputs(vertex).size(); }

 private:
  std::size_t edge_count_;
  std::vector<std::pair<EdgeId, EdgeId>> covers_;
  std::vector<bool> leaf_;
};

ValidationReport validate_tree(const RootedTree& t);

/// Cuts every degenerate branch (a vertex labelled by an identity category of
/// dimension >= 2, with everything above it) back to its first vertex, which
/// keeps one marked leaf edge.
FactorisationTree quotient_degenerate(const FactorisationTree& t);

/// Forgets labels: collapsed vertices get one leaf edge, other childless
/// vertices are 0-ary.
RootedTree forget_labels(const FactorisationTree& t);

RootedTree shape(const StrictNCategory& c);

/// Leaf edge "()", vertex "[...]" with input encodings sorted.
std::string canonical_form(const RootedTree& t);
bool trees_isomorphic(const RootedTree& a, const RootedTree& b);

/// n when T is a chain of n vertices of arity <= 1 (η gives 0).
std::optional<std::size_t> is_linear(const RootedTree& t);

/// Removes the i-th vertex (1 = root vertex) and merges its incident edges.
RootedTree linear_face(const RootedTree& t, std::size_t i);
/// Inserts a unary vertex as the new i-th vertex, 1 <= i <= n+1.
RootedTree linear_degeneracy(const RootedTree& t, std::size_t i);

nlohmann::json to_json(const RootedTree& t);
std::string to_dot(const RootedTree& t);

}  // namespace ncat
