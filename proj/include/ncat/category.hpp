#pragma once

// Finite strict n-categories stored as a single globular cell table.
//
// Every cell has a dimension and (for dim > 0) a source and target of
// dimension dim-1. Identities are explicit cells. Composition is tabulated
// only for equal-dimension pairs: compose(j, first, then) is defined when
// the j-target of `first` equals the j-source of `then`; whiskering is
// expressed through iterated identity cells.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncat/error.hpp"

namespace ncat {

using CellId = std::uint32_t;

struct Cell {
  std::string name;
  int dim = 0;
  std::optional<CellId> src;
  std::optional<CellId> tgt;
};

class StrictNCategory {
 public:
  explicit StrictNCategory(int dimension = 1);

  int dimension() const noexcept { return dimension_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  const Cell& cell(CellId c) const { return cells_.at(c); }
  const std::string& name(CellId c) const { return cells_.at(c).name; }
  int dim(CellId c) const { return cells_.at(c).dim; }
  std::optional<CellId> find(std::string_view name) const;
  CellId at(std::string_view name) const;

  /// Cells of dimension d in declaration order.
  const std::vector<CellId>& cells_of_dim(int d) const;
  const std::vector<CellId>& objects() const { return cells_of_dim(0); }

  CellId add_cell(std::string name, int dim, std::optional<CellId> src = {},
                  std::optional<CellId> tgt = {});
  void set_identity(CellId of, CellId identity_cell);
  void set_composite(int along, CellId first, CellId then, CellId result);
  void clear_composite(int along, CellId first, CellId then);

  std::optional<CellId> identity(CellId c) const;
  /// The cell whose identity `c` is, if any.
  std::optional<CellId> identity_of(CellId c) const;
  bool is_identity_cell(CellId c) const { return identity_of(c).has_value(); }
  /// id(id(...(c))) lifted to dimension `to_dim`; nullopt if an identity is missing.
  std::optional<CellId> iterated_identity(CellId c, int to_dim) const;

  /// Iterated source/target down to dimension j (j < dim(c)).
  CellId source(CellId c, int j) const;
  CellId target(CellId c, int j) const;

  bool composable(int along, CellId first, CellId then) const;
  /// `then ∘_along first`, if tabulated.
  std::optional<CellId> composite(int along, CellId first, CellId then) const;
  std::size_t composite_count(int along) const;

  /// Visits every tabulated composite along j as (first, then, result).
  template <class Fn>
  void for_each_composite(int along, Fn&& fn) const {
    for (const auto& [key, result] : composites_.at(along)) {
      fn(static_cast<CellId>(key >> 32), static_cast<CellId>(key & 0xffffffffu), result);
    }
  }

  /// Cells of dimension `dim` with exactly this source and target.
  std::vector<CellId> parallel_cells(int dim, CellId src, CellId tgt) const;

 private:
  static std::uint64_t key(CellId first, CellId then) {
    return (static_cast<std::uint64_t>(first) << 32) | then;
  }

  int dimension_;
  std::vector<Cell> cells_;
  std::vector<std::vector<CellId>> by_dim_;
  std::unordered_map<std::string, CellId> by_name_;
  std::vector<std::optional<CellId>> identity_;
  std::vector<std::optional<CellId>> identity_of_;
  std::vector<std::unordered_map<std::uint64_t, CellId>> composites_;
};

/// Structure-preserving map between strict n-categories of equal dimension.
struct NFunctor {
  std::shared_ptr<const StrictNCategory> source;
  std::shared_ptr<const StrictNCategory> target;
  std::vector<CellId> map;  // indexed by source cell

  CellId operator()(CellId c) const { return map.at(c); }
};

NFunctor identity_functor(std::shared_ptr<const StrictNCategory> c);

/// Fills in composites determined by the unit laws, by identities of
/// composites, or by being the only cell with the required boundary.
/// Explicit entries are never overwritten.
void synthesize_forced_composites(StrictNCategory& c);

/// Adds `id:<name>` cells for every cell below the top dimension lacking one.
void synthesize_identities(StrictNCategory& c);

ValidationReport validate(const StrictNCategory& c);
ValidationReport validate_functor(const NFunctor& f);

/// Sub-(n-1)-category of cells running from object x to object y.
StrictNCategory hom_category(const StrictNCategory& c, CellId x, CellId y);

/// Objects with 1-cells identified along the congruence generated by 2-cells.
StrictNCategory homotopy_category(const StrictNCategory& c);

StrictNCategory identity_category(int n);
bool is_identity_category(const StrictNCategory& c);

/// One cell per dimension below n and m parallel n-cells forming Z/m on the
/// top identity (the identity n-cell is 0).
StrictNCategory delta_shape_category(int n, int m);

/// Per-dimension cell counts, used for quick summaries and pruning.
std::vector<std::size_t> cell_counts(const StrictNCategory& c);

}  // namespace ncat
