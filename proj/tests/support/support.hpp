#pragma once

// Shared helpers for the unit and acceptance tests: fixture loading,
// relabelled copies of categories and a brute-force isomorphism oracle.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ncat/category.hpp"
#include "ncat/category_io.hpp"

namespace ncat::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(NCAT_FIXTURE_DIR) + "/" + name;
}

inline StrictNCategory fixture(const std::string& name) {
  return load_category(fixture_path(name));
}

inline std::shared_ptr<const StrictNCategory> share(StrictNCategory c) {
  return std::make_shared<const StrictNCategory>(std::move(c));
}

struct Relabelled {
  StrictNCategory category;
  std::vector<CellId> map;  // old cell -> new cell
};

/// Copy of C with cells shuffled inside each dimension and renamed "r<k>".
inline Relabelled shuffled_copy(const StrictNCategory& c, std::uint32_t seed) {
  std::mt19937 rng(seed);
  Relabelled out{StrictNCategory(c.dimension()), std::vector<CellId>(c.cell_count())};
  std::size_t counter = 0;
  for (int d = 0; d <= c.dimension(); ++d) {
    auto cells = c.cells_of_dim(d);
    std::shuffle(cells.begin(), cells.end(), rng);
    for (CellId x : cells) {
      const auto& cell = c.cell(x);
      std::optional<CellId> s, t;
      if (cell.src) s = out.map[*cell.src];
      if (cell.tgt) t = out.map[*cell.tgt];
      out.map[x] = out.category.add_cell("r" + std::to_string(counter++), d, s, t);
    }
  }
  for (CellId x = 0; x < c.cell_count(); ++x) {
    if (auto id = c.identity(x)) out.category.set_identity(out.map[x], out.map[*id]);
  }
  for (int j = 0; j < c.dimension(); ++j) {
    c.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
      out.category.set_composite(j, out.map[a], out.map[b], out.map[r]);
    });
  }
  return out;
}

/// Exhaustive isomorphism test: tries every dimension-wise bijection.
/// Only for categories with a handful of cells per dimension.
inline bool brute_force_isomorphic(const StrictNCategory& c, const StrictNCategory& d) {
  if (c.dimension() != d.dimension() || cell_counts(c) != cell_counts(d)) return false;
  const int n = c.dimension();
  std::vector<std::vector<CellId>> perms(n + 1);
  for (int k = 0; k <= n; ++k) perms[k] = d.cells_of_dim(k);
  for (auto& p : perms) std::sort(p.begin(), p.end());

  auto check = [&]() {
    std::vector<CellId> map(c.cell_count());
    for (int k = 0; k <= n; ++k) {
      const auto& from = c.cells_of_dim(k);
      for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = perms[k][i];
    }
    for (CellId x = 0; x < c.cell_count(); ++x) {
      const auto& cx = c.cell(x);
      const auto& dy = d.cell(map[x]);
      if (cx.src && (map[*cx.src] != *dy.src || map[*cx.tgt] != *dy.tgt)) return false;
      auto ix = c.identity(x);
      auto iy = d.identity(map[x]);
      if (ix.has_value() != iy.has_value() || (ix && map[*ix] != *iy)) return false;
    }
    for (int j = 0; j < n; ++j) {
      if (c.composite_count(j) != d.composite_count(j)) return false;
      bool ok = true;
      c.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
        auto img = d.composite(j, map[a], map[b]);
        ok = ok && img && *img == map[r];
      });
      if (!ok) return false;
    }
    return true;
  };

  // Odometer over the per-dimension permutations.
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k > n) return check();
    do {
      if (rec(k + 1)) return true;
    } while (std::next_permutation(perms[k].begin(), perms[k].end()));
    return false;
  };
  return rec(0);
}

}  // namespace ncat::testing
