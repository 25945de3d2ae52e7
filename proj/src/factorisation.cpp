#include "ncat/factorisation.hpp"

#include <map>
#include <set>

#include "ncat/isomorphism.hpp"

namespace ncat {

std::vector<ShiftPart> shift(const StrictNCategory& c) {
  if (c.dimension() < 2) {
    throw Error(Errc::dimension_too_low, "the shift needs a category of dimension at least 2");
  }
  std::vector<ShiftPart> parts;
  for (CellId x : c.objects()) {
    for (CellId y : c.objects()) {
      auto hom = hom_category(c, x, y);
      if (hom.empty()) continue;
      parts.push_back({HomTag{c.name(x), c.name(y)}, std::move(hom)});
    }
  }
  return parts;
}

std::vector<ShiftPath> iterated_shift(const StrictNCategory& c, int k) {
  if (k < 0 || k >= c.dimension()) {
    throw Error(Errc::out_of_range, "shift " + std::to_string(k) + " of a " +
                                        std::to_string(c.dimension()) +
                                        "-category is undefined (need 0 <= k < n)");
  }
  std::vector<ShiftPath> level{{{}, c}};
  for (int step = 0; step < k; ++step) {
    std::vector<ShiftPath> next;
    for (const auto& entry : level) {
      for (auto& part : shift(entry.category)) {
        auto path = entry.path;
        path.push_back(part.tag);
        next.push_back({std::move(path), std::move(part.category)});
      }
    }
    level = std::move(next);
  }
  return level;
}

FactorisationTree factorisation_tree(const StrictNCategory& c) {
  FactorisationTree node{c, std::nullopt, false, {}};
  if (c.dimension() >= 2) {
    for (auto& part : shift(c)) {
      auto child = factorisation_tree(part.category);
      child.tag = part.tag;
      node.children.push_back(std::move(child));
    }
  }
  return node;
}

FactorisationPlane plane_of(const FactorisationTree& tree) {
  FactorisationPlane node{homotopy_category(tree.label), tree.tag, tree.collapsed, {}};
  node.children.reserve(tree.children.size());
  for (const auto& child : tree.children) node.children.push_back(plane_of(child));
  return node;
}

FactorisationPlane factorisation_plane(const StrictNCategory& c) {
  return plane_of(factorisation_tree(c));
}

const StrictNCategory& plane_vertex(const FactorisationPlane& p, std::size_t i, std::size_t j) {
  const auto levels = tree_levels(p);
  if (i < 1 || i > levels.size() || j < 1 || j > levels[i - 1].size()) {
    throw Error(Errc::out_of_range, "plane vertex (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") does not exist");
  }
  return levels[i - 1][j - 1]->label;
}

namespace {

void index_tree(const FactorisationTree& node, VertexPath& path,
                std::map<VertexPath, const FactorisationTree*>& out) {
  out.emplace(path, &node);
  for (const auto& child : node.children) {
    path.push_back(*child.tag);
    index_tree(child, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<VertexImage> induced_tree_functor(const NFunctor& f) {
  const auto& src = *f.source;
  const auto& dst = *f.target;
  const auto src_tree = factorisation_tree(src);
  const auto dst_tree = factorisation_tree(dst);
  std::map<VertexPath, const FactorisationTree*> dst_index;
  {
    VertexPath path;
    index_tree(dst_tree, path, dst_index);
  }
  auto image_name = [&](const std::string& name) { return dst.name(f(src.at(name))); };

  std::vector<VertexImage> out;
  // Breadth-first over (node, path).
  std::vector<std::pair<const FactorisationTree*, VertexPath>> frontier{{&src_tree, {}}};
  while (!frontier.empty()) {
    std::vector<std::pair<const FactorisationTree*, VertexPath>> next;
    for (const auto& [node, path] : frontier) {
      VertexPath mapped;
      for (const auto& tag : path) mapped.push_back({image_name(tag.source), image_name(tag.target)});
      auto it = dst_index.find(mapped);
      if (it == dst_index.end()) {
        throw Error(Errc::functoriality, "image vertex missing from the target tree");
      }
      const auto& from = node->label;
      const auto& to = it->second->label;
      NFunctor restricted;
      restricted.source = std::make_shared<const StrictNCategory>(from);
      restricted.target = std::make_shared<const StrictNCategory>(to);
      restricted.map.reserve(from.cell_count());
      for (CellId x = 0; x < from.cell_count(); ++x) {
        restricted.map.push_back(to.at(image_name(from.name(x))));
      }
      out.push_back({path, mapped, std::move(restricted)});
      for (const auto& child : node->children) {
        auto child_path = path;
        child_path.push_back(*child.tag);
        next.emplace_back(&child, std::move(child_path));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

class PlaneMatcher {
 public:
  bool match(const FactorisationPlane& p, const FactorisationPlane& q) {
    auto key = std::make_pair(&p, &q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = compute(p, q);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool compute(const FactorisationPlane& p, const FactorisationPlane& q) {
    if (p.children.size() != q.children.size() || p.collapsed != q.collapsed) return false;
    if (fingerprint(p.label) != fingerprint(q.label)) return false;

    std::set<std::vector<CellId>> object_maps;
    const auto& objs = p.label.objects();
    for_each_isomorphism(p.label, q.label, [&](const std::vector<CellId>& map) {
      std::vector<CellId> om;
      for (CellId x : objs) om.push_back(map[x]);
      object_maps.insert(std::move(om));
      return true;
    });
    if (object_maps.empty()) return false;

    std::map<HomTag, const FactorisationPlane*> q_children;
    for (const auto& child : q.children) q_children.emplace(*child.tag, &child);

    for (const auto& om : object_maps) {
      std::map<std::string, std::string> rename;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        rename.emplace(p.label.name(objs[i]), q.label.name(om[i]));
      }
      bool ok = true;
      for (const auto& child : p.children) {
        HomTag image{rename.at(child.tag->source), rename.at(child.tag->target)};
        auto it = q_children.find(image);
        if (it == q_children.end() || !match(child, *it->second)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  std::map<std::pair<const FactorisationPlane*, const FactorisationPlane*>, bool> memo_;
};

}  // namespace

bool planes_isomorphic(const FactorisationPlane& p, const FactorisationPlane& q) {
  return PlaneMatcher().match(p, q);
}

}  // namespace ncat
