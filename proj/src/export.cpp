#include "ncat/export.hpp"

#include <map>
#include <sstream>

#include "ncat/category_io.hpp"

namespace ncat {

namespace {

template <class Label>
using Coords = std::map<const LabelledTree<Label>*, std::pair<std::size_t, std::size_t>>;

template <class Label>
Coords<Label> coordinates(const LabelledTree<Label>& root) {
  Coords<Label> out;
  const auto levels = tree_levels(root);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = 0; j < levels[i].size(); ++j) out[levels[i][j]] = {i + 1, j + 1};
  }
  return out;
}

std::string tag_text(const std::optional<HomTag>& tag) {
  return tag ? "Hom(" + tag->source + "," + tag->target + ")" : "root";
}

std::string coord_text(std::pair<std::size_t, std::size_t> c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

template <class Label, class Describe>
std::string to_dot_generic(const LabelledTree<Label>& root, const std::string& name,
                           Describe describe) {
  const auto coords = coordinates(root);
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=TB;\n  node [shape=box];\n";
  auto id = [&](const LabelledTree<Label>* n) {
    const auto c = coords.at(n);
    return "v" + std::to_string(c.first) + "_" + std::to_string(c.second);
  };
  for (const auto& level : tree_levels(root)) {
    for (const auto* node : level) {
      out << "  " << id(node) << " [label=\""
          << dot_escape(coord_text(coords.at(node)) + " " + tag_text(node->tag) + "\\n" +
                        describe(*node))
          << "\"];\n";
    }
  }
  for (const auto& level : tree_levels(root)) {
    for (const auto* node : level) {
      for (const auto& child : node->children) {
        out << "  " << id(node) << " -> " << id(&child) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string category_summary(const StrictNCategory& c) {
  std::string out = "dimension " + std::to_string(c.dimension()) + ", cells ";
  const auto counts = cell_counts(c);
  for (std::size_t i = 0; i < counts.size(); ++i) out += (i ? "/" : "") + std::to_string(counts[i]);
  return out;
}

nlohmann::json tree_to_json(const FactorisationTree& t) {
  const auto coords = coordinates(t);
  std::function<nlohmann::json(const FactorisationTree&)> rec = [&](const FactorisationTree& n) {
    const auto c = coords.at(&n);
    nlohmann::json j{{"vertex", {c.first, c.second}}};
    if (n.tag) j["tag"] = {n.tag->source, n.tag->target};
    if (n.collapsed) j["collapsed"] = true;
    j["label"] = to_json(n.label);
    j["children"] = nlohmann::json::array();
    for (const auto& child : n.children) j["children"].push_back(rec(child));
    return j;
  };
  return rec(t);
}

std::string tree_to_text(const FactorisationTree& t) {
  const auto coords = coordinates(t);
  std::ostringstream out;
  std::function<void(const FactorisationTree&, int)> rec = [&](const FactorisationTree& n,
                                                               int depth) {
    out << std::string(2 * depth, ' ') << coord_text(coords.at(&n)) << ' ' << tag_text(n.tag)
        << ": " << category_summary(n.label) << (n.collapsed ? " [collapsed]" : "") << '\n';
    for (const auto& child : n.children) rec(child, depth + 1);
  };
  rec(t, 0);
  return out.str();
}

std::string tree_to_dot(const FactorisationTree& t, const std::string& graph_name) {
  return to_dot_generic(t, graph_name,
                        [](const FactorisationTree& n) { return category_summary(n.label); });
}

nlohmann::json cohomology_to_json(const CohomologyTree& t, int degree) {
  const auto coords = coordinates(t);
  std::function<nlohmann::json(const CohomologyTree&)> rec = [&](const CohomologyTree& n) {
    const auto c = coords.at(&n);
    nlohmann::json j{{"vertex", {c.first, c.second}}, {"degree", degree}};
    if (n.tag) j["tag"] = {n.tag->source, n.tag->target};
    j["group"] = n.label.to_string();
    j["children"] = nlohmann::json::array();
    for (const auto& child : n.children) j["children"].push_back(rec(child));
    return j;
  };
  return rec(t);
}

std::string cohomology_to_text(const CohomologyTree& t) {
  const auto coords = coordinates(t);
  std::ostringstream out;
  std::function<void(const CohomologyTree&, int)> rec = [&](const CohomologyTree& n, int depth) {
    out << std::string(2 * depth, ' ') << coord_text(coords.at(&n)) << ' ' << tag_text(n.tag)
        << ": " << n.label.to_string() << '\n';
    for (const auto& child : n.children) rec(child, depth + 1);
  };
  rec(t, 0);
  return out.str();
}

std::string cohomology_to_dot(const CohomologyTree& t) {
  return to_dot_generic(t, "cohomology",
                        [](const CohomologyTree& n) { return n.label.to_string(); });
}

}  // namespace ncat
