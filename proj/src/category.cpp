#include "ncat/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ncat {

namespace {

const std::vector<CellId> kNoCells;

}  // namespace

StrictNCategory::StrictNCategory(int dimension)
    : dimension_(dimension),
      by_dim_(static_cast<std::size_t>(std::max(dimension, 0) + 1)),
      composites_(static_cast<std::size_t>(std::max(dimension, 0))) {
  if (dimension < 1) {
    throw Error(Errc::invalid_argument, "category dimension must be at least 1");
  }
}

std::optional<CellId> StrictNCategory::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

CellId StrictNCategory::at(std::string_view name) const {
  if (auto c = find(name)) return *c;
  throw Error(Errc::dangling_reference, "no cell named '" + std::string(name) + "'");
}

const std::vector<CellId>& StrictNCategory::cells_of_dim(int d) const {
  if (d < 0 || d > dimension_) return kNoCells;
  return by_dim_[static_cast<std::size_t>(d)];
}

CellId StrictNCategory::add_cell(std::string name, int dim, std::optional<CellId> src,
                                 std::optional<CellId> tgt) {
  if (dim < 0 || dim > dimension_) {
    throw Error(Errc::out_of_range, "cell '" + name + "' has dimension " + std::to_string(dim) +
                                        " outside 0.." + std::to_string(dimension_));
  }
  if (by_name_.count(name) != 0) {
    throw Error(Errc::duplicate_id, "duplicate cell id '" + name + "'");
  }
  auto check_ref = [&](std::optional<CellId> r) {
    if (r && *r >= cells_.size()) {
      throw Error(Errc::dangling_reference, "cell '" + name + "' references an unknown cell");
    }
  };
  check_ref(src);
  check_ref(tgt);
  const auto id = static_cast<CellId>(cells_.size());
  by_name_.emplace(name, id);
  cells_.push_back(Cell{std::move(name), dim, src, tgt});
  by_dim_[static_cast<std::size_t>(dim)].push_back(id);
  identity_.emplace_back();
  identity_of_.emplace_back();
  return id;
}

void StrictNCategory::set_identity(CellId of, CellId identity_cell) {
  if (of >= cells_.size() || identity_cell >= cells_.size()) {
    throw Error(Errc::dangling_reference, "identity refers to an unknown cell");
  }
  identity_[of] = identity_cell;
  identity_of_[identity_cell] = of;
}

void StrictNCategory::set_composite(int along, CellId first, CellId then, CellId result) {
  if (along < 0 || along >= dimension_) {
    throw Error(Errc::out_of_range, "composition along " + std::to_string(along) +
                                        " in a " + std::to_string(dimension_) + "-category");
  }
  if (first >= cells_.size() || then >= cells_.size() || result >= cells_.size()) {
    throw Error(Errc::dangling_reference, "composition refers to an unknown cell");
  }
  composites_[static_cast<std::size_t>(along)][key(first, then)] = result;
}

void StrictNCategory::clear_composite(int along, CellId first, CellId then) {
  if (along < 0 || along >= dimension_) return;
  composites_[static_cast<std::size_t>(along)].erase(key(first, then));
}

std::optional<CellId> StrictNCategory::identity(CellId c) const { return identity_.at(c); }

std::optional<CellId> StrictNCategory::identity_of(CellId c) const { return identity_of_.at(c); }

std::optional<CellId> StrictNCategory::iterated_identity(CellId c, int to_dim) const {
  CellId cur = c;
  while (dim(cur) < to_dim) {
    auto next = identity(cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

CellId StrictNCategory::source(CellId c, int j) const {
  CellId cur = c;
  while (dim(cur) > j) {
    const auto& s = cells_[cur].src;
    if (!s) throw Error(Errc::dangling_reference, "cell '" + name(cur) + "' has no source");
    cur = *s;
  }
  return cur;
}

CellId StrictNCategory::target(CellId c, int j) const {
  // For globular cells the iterated target is the target of the target.
  CellId cur = c;
  while (dim(cur) > j) {
    const auto& t = cells_[cur].tgt;
    if (!t) throw Error(Errc::dangling_reference, "cell '" + name(cur) + "' has no target");
    cur = *t;
  }
  return cur;
}

bool StrictNCategory::composable(int along, CellId first, CellId then) const {
  const int d = dim(first);
  if (d != dim(then) || d <= along || along < 0) return false;
  return target(first, along) == source(then, along);
}

std::optional<CellId> StrictNCategory::composite(int along, CellId first, CellId then) const {
  if (along < 0 || along >= dimension_) return std::nullopt;
  const auto& table = composites_[static_cast<std::size_t>(along)];
  auto it = table.find(key(first, then));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::size_t StrictNCategory::composite_count(int along) const {
  if (along < 0 || along >= dimension_) return 0;
  return composites_[static_cast<std::size_t>(along)].size();
}

std::vector<CellId> StrictNCategory::parallel_cells(int d, CellId src, CellId tgt) const {
  std::vector<CellId> out;
  for (CellId c : cells_of_dim(d)) {
    if (cells_[c].src == src && cells_[c].tgt == tgt) out.push_back(c);
  }
  return out;
}

NFunctor identity_functor(std::shared_ptr<const StrictNCategory> c) {
  NFunctor f;
  f.map.resize(c->cell_count());
  std::iota(f.map.begin(), f.map.end(), CellId{0});
  f.source = c;
  f.target = std::move(c);
  return f;
}

std::vector<std::size_t> cell_counts(const StrictNCategory& c) {
  std::vector<std::size_t> counts;
  for (int d = 0; d <= c.dimension(); ++d) counts.push_back(c.cells_of_dim(d).size());
  return counts;
}

void synthesize_identities(StrictNCategory& c) {
  for (int d = 0; d < c.dimension(); ++d) {
    const std::vector<CellId> cells = c.cells_of_dim(d);
    for (CellId x : cells) {
      if (c.identity(x)) continue;
      const CellId id = c.add_cell("id:" + c.name(x), d + 1, x, x);
      c.set_identity(x, id);
    }
  }
}

namespace {

// Boundary a composite must have, if it can already be computed.
std::optional<std::pair<CellId, CellId>> required_boundary(const StrictNCategory& c, int j,
                                                           CellId a, CellId b) {
  const int d = c.dim(a);
  const auto& ca = c.cell(a);
  const auto& cb = c.cell(b);
  if (!ca.src || !ca.tgt || !cb.src || !cb.tgt) return std::nullopt;
  if (j == d - 1) return std::make_pair(*ca.src, *cb.tgt);
  auto s = c.composite(j, *ca.src, *cb.src);
  auto t = c.composite(j, *ca.tgt, *cb.tgt);
  if (!s || !t) return std::nullopt;
  return std::make_pair(*s, *t);
}

}  // namespace

void synthesize_forced_composites(StrictNCategory& c) {
  const int n = c.dimension();
  for (int d = 1; d <= n; ++d) {
    const auto& cells = c.cells_of_dim(d);
    for (int j = 0; j < d; ++j) {
      for (CellId a : cells) {
        for (CellId b : cells) {
          if (c.composite(j, a, b) || !c.composable(j, a, b)) continue;
          if (auto unit = c.iterated_identity(c.source(b, j), d); unit && *unit == a) {
            c.set_composite(j, a, b, b);
            continue;
          }
          if (auto unit = c.iterated_identity(c.target(a, j), d); unit && *unit == b) {
            c.set_composite(j, a, b, a);
            continue;
          }
          auto ia = c.identity_of(a);
          auto ib = c.identity_of(b);
          if (ia && ib && j < d - 1) {
            if (auto r = c.composite(j, *ia, *ib); r && c.identity(*r)) {
              c.set_composite(j, a, b, *c.identity(*r));
              continue;
            }
          }
          if (auto boundary = required_boundary(c, j, a, b)) {
            auto candidates = c.parallel_cells(d, boundary->first, boundary->second);
            if (candidates.size() == 1) c.set_composite(j, a, b, candidates.front());
          }
        }
      }
    }
  }
}

namespace {

class Validator {
 public:
  explicit Validator(const StrictNCategory& c) : c_(c) {}

  ValidationReport run() {
    check_boundaries();
    if (!report_.empty()) return std::move(report_);
    check_globularity();
    if (!report_.empty()) return std::move(report_);
    check_identities();
    if (!report_.empty()) return std::move(report_);
    build_successors();
    check_composites();
    check_units();
    check_identity_composites();
    check_associativity();
    check_interchange();
    return std::move(report_);
  }

 private:
  void add(std::string law, std::vector<CellId> cells, std::string detail = {}) {
    Violation v{std::move(law), {}, std::move(detail)};
    for (CellId x : cells) v.witnesses.push_back(c_.name(x));
    report_.push_back(std::move(v));
  }

  void check_boundaries() {
    for (int d = 0; d <= c_.dimension(); ++d) {
      for (CellId x : c_.cells_of_dim(d)) {
        const auto& cell = c_.cell(x);
        if (d == 0) {
          if (cell.src || cell.tgt) add("boundary", {x}, "objects have no source or target");
          continue;
        }
        if (!cell.src || !cell.tgt) {
          add("boundary", {x}, "missing source or target");
          continue;
        }
        if (c_.dim(*cell.src) != d - 1 || c_.dim(*cell.tgt) != d - 1) {
          add("boundary", {x}, "source and target must have dimension " + std::to_string(d - 1));
        }
      }
    }
  }

  void check_globularity() {
    for (int d = 2; d <= c_.dimension(); ++d) {
      for (CellId x : c_.cells_of_dim(d)) {
        const auto& cell = c_.cell(x);
        const auto& s = c_.cell(*cell.src);
        const auto& t = c_.cell(*cell.tgt);
        if (s.src != t.src || s.tgt != t.tgt) add("globularity", {x});
      }
    }
  }

  void check_identities() {
    for (int d = 0; d < c_.dimension(); ++d) {
      for (CellId x : c_.cells_of_dim(d)) {
        auto id = c_.identity(x);
        if (!id) {
          add("identity", {x}, "missing identity cell");
          continue;
        }
        const auto& cell = c_.cell(*id);
        if (cell.dim != d + 1 || cell.src != x || cell.tgt != x) {
          add("identity", {x, *id}, "identity must be an endo-cell one dimension up");
        }
      }
    }
  }

  // succ_[j][x] = cells of dim(x)+... whose j-source is the j-boundary cell x.
  void build_successors() {
    const int n = c_.dimension();
    by_source_.assign(static_cast<std::size_t>(n), {});
    for (int d = 1; d <= n; ++d) {
      for (CellId b : c_.cells_of_dim(d)) {
        for (int j = 0; j < d; ++j) {
          by_source_[static_cast<std::size_t>(j)][c_.source(b, j)].push_back(b);
        }
      }
    }
  }

  // Cells of the same dimension as a that can follow a along j.
  std::vector<CellId> successors(int j, CellId a) const {
    std::vector<CellId> out;
    const auto& table = by_source_[static_cast<std::size_t>(j)];
    auto it = table.find(c_.target(a, j));
    if (it == table.end()) return out;
    const int d = c_.dim(a);
    for (CellId b : it->second) {
      if (c_.dim(b) == d) out.push_back(b);
    }
    return out;
  }

  void check_composites() {
    const int n = c_.dimension();
    for (int j = 0; j < n; ++j) {
      c_.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
        if (!c_.composable(j, a, b)) {
          add("composition-domain", {a, b}, "tabulated pair is not composable along " +
                                                std::to_string(j));
        }
        (void)r;
      });
    }
    for (int d = 1; d <= n; ++d) {
      for (int j = 0; j < d; ++j) {
        for (CellId a : c_.cells_of_dim(d)) {
          for (CellId b : successors(j, a)) {
            auto r = c_.composite(j, a, b);
            if (!r) {
              add("composition-total", {a, b}, "missing composite along " + std::to_string(j));
              continue;
            }
            if (c_.dim(*r) != d) {
              add("composition-closed", {a, b, *r}, "composite has the wrong dimension");
              continue;
            }
            const auto& rc = c_.cell(*r);
            std::optional<CellId> want_s;
            std::optional<CellId> want_t;
            if (j == d - 1) {
              want_s = c_.cell(a).src;
              want_t = c_.cell(b).tgt;
            } else {
              want_s = c_.composite(j, *c_.cell(a).src, *c_.cell(b).src);
              want_t = c_.composite(j, *c_.cell(a).tgt, *c_.cell(b).tgt);
            }
            if (want_s && want_t && (rc.src != want_s || rc.tgt != want_t)) {
              add("composition-boundary", {a, b, *r}, "along " + std::to_string(j));
            }
          }
        }
      }
    }
  }

  void check_units() {
    const int n = c_.dimension();
    for (int d = 1; d <= n; ++d) {
      for (int j = 0; j < d; ++j) {
        for (CellId a : c_.cells_of_dim(d)) {
          auto left = c_.iterated_identity(c_.source(a, j), d);
          auto right = c_.iterated_identity(c_.target(a, j), d);
          if (left) {
            if (auto r = c_.composite(j, *left, a); r && *r != a) {
              add("unit-left", {*left, a}, "along " + std::to_string(j));
            }
          }
          if (right) {
            if (auto r = c_.composite(j, a, *right); r && *r != a) {
              add("unit-right", {a, *right}, "along " + std::to_string(j));
            }
          }
        }
      }
    }
  }

  void check_identity_composites() {
    const int n = c_.dimension();
    for (int d = 1; d < n; ++d) {
      for (int j = 0; j < d; ++j) {
        for (CellId a : c_.cells_of_dim(d)) {
          for (CellId b : successors(j, a)) {
            auto r = c_.composite(j, a, b);
            auto ia = c_.identity(a);
            auto ib = c_.identity(b);
            if (!r || !ia || !ib) continue;
            auto lifted = c_.composite(j, *ia, *ib);
            if (lifted && lifted != c_.identity(*r)) {
              add("identity-composite", {a, b}, "id(b∘a) != id(b)∘id(a) along " +
                                                    std::to_string(j));
            }
          }
        }
      }
    }
  }

  void check_associativity() {
    const int n = c_.dimension();
    for (int d = 1; d <= n; ++d) {
      for (int j = 0; j < d; ++j) {
        for (CellId a : c_.cells_of_dim(d)) {
          for (CellId b : successors(j, a)) {
            auto ab = c_.composite(j, a, b);
            if (!ab) continue;
            for (CellId e : successors(j, b)) {
              auto be = c_.composite(j, b, e);
              if (!be) continue;
              auto left = c_.composite(j, *ab, e);
              auto right = c_.composite(j, a, *be);
              if (left && right && *left != *right) {
                add("associativity", {a, b, e}, "along " + std::to_string(j));
              }
            }
          }
        }
      }
    }
  }

  // (b ∘_k a) ∘_j (d ∘_k c) = (b ∘_j d) ∘_k (a ∘_j c) for j < k.
  void check_interchange() {
    const int n = c_.dimension();
    for (int dm = 2; dm <= n; ++dm) {
      for (int k = 1; k < dm; ++k) {
        for (int j = 0; j < k; ++j) {
          for (CellId c : c_.cells_of_dim(dm)) {
            for (CellId a : successors(j, c)) {
              auto ac = c_.composite(j, c, a);
              if (!ac) continue;
              for (CellId b : successors(k, a)) {
                auto ba = c_.composite(k, a, b);
                if (!ba) continue;
                for (CellId d : successors(k, c)) {
                  auto dc = c_.composite(k, c, d);
                  auto bd = c_.composite(j, d, b);
                  if (!dc || !bd) continue;
                  auto lhs = c_.composite(j, *dc, *ba);
                  auto rhs = c_.composite(k, *ac, *bd);
                  if (lhs && rhs && *lhs != *rhs) {
                    add("interchange", {a, b, c, d},
                        "along " + std::to_string(j) + " and " + std::to_string(k));
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  const StrictNCategory& c_;
  ValidationReport report_;
  std::vector<std::unordered_map<CellId, std::vector<CellId>>> by_source_;
};

}  // namespace

ValidationReport validate(const StrictNCategory& c) { return Validator(c).run(); }

ValidationReport validate_functor(const NFunctor& f) {
  ValidationReport report;
  if (!f.source || !f.target) {
    report.push_back({"functor-shape", {}, "source or target missing"});
    return report;
  }
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (s.dimension() != t.dimension()) {
    report.push_back({"functor-dimension", {}, "source and target dimensions differ"});
    return report;
  }
  if (f.map.size() != s.cell_count()) {
    report.push_back({"functor-total", {}, "map does not cover every source cell"});
    return report;
  }
  for (CellId x = 0; x < s.cell_count(); ++x) {
    if (f.map[x] >= t.cell_count()) {
      report.push_back({"functor-total", {s.name(x)}, "image is not a target cell"});
      return report;
    }
  }
  auto image = [&](CellId x) { return f.map[x]; };
  for (CellId x = 0; x < s.cell_count(); ++x) {
    const auto& cell = s.cell(x);
    const auto fx = image(x);
    if (t.dim(fx) != cell.dim) {
      report.push_back({"functor-dimension", {s.name(x), t.name(fx)}, "dimension not preserved"});
      continue;
    }
    if (cell.dim > 0) {
      if (!cell.src || t.cell(fx).src != image(*cell.src) || t.cell(fx).tgt != image(*cell.tgt)) {
        report.push_back({"functor-boundary", {s.name(x)}, "source/target not preserved"});
      }
    }
    if (auto id = s.identity(x)) {
      if (t.identity(fx) != image(*id)) {
        report.push_back({"functor-identity", {s.name(x)}, "identity not preserved"});
      }
    }
  }
  for (int j = 0; j < s.dimension(); ++j) {
    std::vector<std::tuple<CellId, CellId, CellId>> entries;
    s.for_each_composite(j, [&](CellId a, CellId b, CellId r) { entries.emplace_back(a, b, r); });
    std::sort(entries.begin(), entries.end());
    for (const auto& [a, b, r] : entries) {
      auto fr = t.composite(j, image(a), image(b));
      if (!fr || *fr != image(r)) {
        report.push_back({"functor-composition", {s.name(a), s.name(b)},
                          "composition along " + std::to_string(j) + " not preserved"});
      }
    }
  }
  return report;
}

StrictNCategory hom_category(const StrictNCategory& c, CellId x, CellId y) {
  if (c.dimension() < 2) {
    throw Error(Errc::dimension_too_low, "hom-categories need dimension at least 2");
  }
  if (x >= c.cell_count() || y >= c.cell_count() || c.dim(x) != 0 || c.dim(y) != 0) {
    throw Error(Errc::unknown_object, "hom endpoints must be objects");
  }
  StrictNCategory hom(c.dimension() - 1);
  std::unordered_map<CellId, CellId> local;
  for (int d = 1; d <= c.dimension(); ++d) {
    for (CellId cell : c.cells_of_dim(d)) {
      if (c.source(cell, 0) != x || c.target(cell, 0) != y) continue;
      std::optional<CellId> s;
      std::optional<CellId> t;
      if (d >= 2) {
        s = local.at(*c.cell(cell).src);
        t = local.at(*c.cell(cell).tgt);
      }
      local.emplace(cell, hom.add_cell(c.name(cell), d - 1, s, t));
    }
  }
  for (const auto& [outer, inner] : local) {
    if (auto id = c.identity(outer)) {
      if (auto it = local.find(*id); it != local.end()) hom.set_identity(inner, it->second);
    }
  }
  for (int j = 1; j < c.dimension(); ++j) {
    c.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
      auto ia = local.find(a);
      auto ib = local.find(b);
      auto ir = local.find(r);
      if (ia != local.end() && ib != local.end() && ir != local.end()) {
        hom.set_composite(j - 1, ia->second, ib->second, ir->second);
      }
    });
  }
  return hom;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

StrictNCategory homotopy_category(const StrictNCategory& c) {
  if (c.dimension() == 1) return c;
  const auto& arrows = c.cells_of_dim(1);
  std::unordered_map<CellId, std::size_t> pos;
  for (std::size_t i = 0; i < arrows.size(); ++i) pos.emplace(arrows[i], i);

  UnionFind uf(arrows.size());
  for (CellId two : c.cells_of_dim(2)) {
    uf.unite(pos.at(*c.cell(two).src), pos.at(*c.cell(two).tgt));
  }
  // Close the relation under composition until it is a congruence.
  std::vector<std::tuple<CellId, CellId, CellId>> comps;
  c.for_each_composite(0, [&](CellId a, CellId b, CellId r) {
    if (c.dim(a) == 1) comps.emplace_back(a, b, r);
  });
  std::sort(comps.begin(), comps.end());
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& [a, b, r] : comps) {
      auto k = std::make_pair(uf.find(pos.at(a)), uf.find(pos.at(b)));
      auto rc = uf.find(pos.at(r));
      auto [it, inserted] = seen.emplace(k, rc);
      if (!inserted && uf.find(it->second) != rc) {
        changed |= uf.unite(it->second, rc);
      }
    }
  }

  // Representative per class: the identity arrow if present, else the first declared.
  std::vector<std::optional<std::size_t>> rep(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (c.is_identity_cell(arrows[i])) rep[uf.find(i)] = i;
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto& r = rep[uf.find(i)];
    if (!r) r = i;
  }

  StrictNCategory h(1);
  std::unordered_map<CellId, CellId> local;
  for (CellId x : c.objects()) local.emplace(x, h.add_cell(c.name(x), 0));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (*rep[uf.find(i)] != i) continue;
    const auto& a = c.cell(arrows[i]);
    local.emplace(arrows[i], h.add_cell(a.name, 1, local.at(*a.src), local.at(*a.tgt)));
  }
  auto image = [&](CellId arrow) { return local.at(arrows[*rep[uf.find(pos.at(arrow))]]); };
  for (CellId x : c.objects()) {
    if (auto id = c.identity(x)) h.set_identity(local.at(x), image(*id));
  }
  for (const auto& [a, b, r] : comps) h.set_composite(0, image(a), image(b), image(r));
  return h;
}

StrictNCategory identity_category(int n) {
  StrictNCategory c(n);
  c.add_cell("x", 0);
  synthesize_identities(c);
  synthesize_forced_composites(c);
  return c;
}

bool is_identity_category(const StrictNCategory& c) {
  for (int d = 0; d <= c.dimension(); ++d) {
    if (c.cells_of_dim(d).size() != 1) return false;
  }
  return true;
}

StrictNCategory delta_shape_category(int n, int m) {
  if (n < 1 || m < 2) {
    throw Error(Errc::invalid_argument, "delta_shape_category needs n >= 1 and m >= 2");
  }
  StrictNCategory c(n);
  CellId cur = c.add_cell("x", 0);
  for (int d = 1; d <= n; ++d) {
    const CellId id = c.add_cell("id:" + c.name(cur), d, cur, cur);
    c.set_identity(cur, id);
    cur = id;
  }
  const CellId base = *c.cell(cur).src;
  std::vector<CellId> top{cur};
  for (int k = 1; k < m; ++k) top.push_back(c.add_cell("t" + std::to_string(k), n, base, base));
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) c.set_composite(j, top[a], top[b], top[(a + b) % m]);
    }
  }
  synthesize_forced_composites(c);
  return c;
}

}  // namespace ncat
