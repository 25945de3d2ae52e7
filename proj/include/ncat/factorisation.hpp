#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncat/category.hpp"

namespace ncat {

/// Ordered pair of objects (by cell name) that a shift part is the hom of.
struct HomTag {
  std::string source;
  std::string target;

  auto operator<=>(const HomTag&) const = default;
};

using VertexPath = std::vector<HomTag>;

struct ShiftPart {
  HomTag tag;
  StrictNCategory category;
};

/// Non-empty hom-categories over all ordered object pairs, ordered by the
/// declaration order of (source, target).
std::vector<ShiftPart> shift(const StrictNCategory& c);

struct ShiftPath {
  VertexPath path;
  StrictNCategory category;
};

/// Level k of the factorisation tree, flattened left to right. k = 0 is C.
std::vector<ShiftPath> iterated_shift(const StrictNCategory& c, int k);

template <class Label>
struct LabelledTree {
  Label label;
  std::optional<HomTag> tag;
  bool collapsed = false;  // a degenerate branch cut back to its first vertex
  std::vector<LabelledTree> children;
};

using FactorisationTree = LabelledTree<StrictNCategory>;
/// Same structure as the tree, every label a 1-category.
using FactorisationPlane = LabelledTree<StrictNCategory>;

FactorisationTree factorisation_tree(const StrictNCategory& c);
FactorisationPlane factorisation_plane(const StrictNCategory& c);
FactorisationPlane plane_of(const FactorisationTree& tree);

template <class Label>
std::vector<std::vector<const LabelledTree<Label>*>> tree_levels(const LabelledTree<Label>& root) {
  std::vector<std::vector<const LabelledTree<Label>*>> levels{{&root}};
  while (true) {
    std::vector<const LabelledTree<Label>*> next;
    for (const auto* node : levels.back()) {
      for (const auto& child : node->children) next.push_back(&child);
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

template <class Label>
std::vector<std::size_t> level_sizes(const LabelledTree<Label>& root) {
  std::vector<std::size_t> sizes;
  for (const auto& level : tree_levels(root)) sizes.push_back(level.size());
  return sizes;
}

/// Text encoding of tags, arities and collapse marks, ignoring labels.
template <class Label>
std::string structure_signature(const LabelledTree<Label>& node) {
  std::string out = "(";
  if (node.tag) out += node.tag->source + "->" + node.tag->target;
  if (node.collapsed) out += "|";
  for (const auto& child : node.children) out += structure_signature(child);
  out += ")";
  return out;
}

/// Label at level i (root = 1), position j counted left to right (both 1-based).
const StrictNCategory& plane_vertex(const FactorisationPlane& p, std::size_t i, std::size_t j);

struct VertexImage {
  VertexPath source_vertex;
  VertexPath target_vertex;
  NFunctor functor;
};

/// Restricts F to every vertex Hom(a, b) of F(source), landing in the
/// vertex Hom(Fa, Fb) of F(target). Vertices are listed level by level.
std::vector<VertexImage> induced_tree_functor(const NFunctor& f);

/// True iff some tree isomorphism carries tags along vertex-wise category
/// isomorphisms (the object part of each label isomorphism relabels the tags
/// of that vertex's children).
bool planes_isomorphic(const FactorisationPlane& p, const FactorisationPlane& q);

}  // namespace ncat
