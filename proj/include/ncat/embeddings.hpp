#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ncat/category.hpp"

namespace ncat {

/// Iso classes of shift parts with multiplicities, in order of first appearance.
struct ShiftClass {
  StrictNCategory representative;
  std::size_t multiplicity = 0;
};

using ShiftMultiset = std::vector<ShiftClass>;

ShiftMultiset shift_multiset(const StrictNCategory& c);
ShiftMultiset multiset_of(const std::vector<StrictNCategory>& parts);
bool multisets_equal(const ShiftMultiset& a, const ShiftMultiset& b);
bool shifts_equal(const StrictNCategory& c, const StrictNCategory& d);

struct EnumerationBounds {
  int max_objects = 3;
  int max_cells_per_dim = 3;  // non-identity 1-cells and non-identity 2-cells
  // Optional exact totals (identities included), used to narrow a search.
  std::optional<std::size_t> one_cells;
  std::optional<std::size_t> two_cells;
};

/// Streams every valid strict 2-category with 1..max_objects objects within the
/// bounds, one per isomorphism class, in a fixed order. `visit` returns false to stop.
void enumerate_2categories(const EnumerationBounds& bounds,
                           const std::function<bool(const StrictNCategory&)>& visit);
std::vector<StrictNCategory> enumerate_2categories(int max_objects, int max_cells_per_dim);

/// Pairwise non-isomorphic 2-categories within the bounds whose shift
/// multiset matches `parts`.
std::vector<StrictNCategory> embedding_search(const std::vector<StrictNCategory>& parts,
                                              int max_objects, int max_cells_per_dim = 3);

/// Same filter over an explicit catalogue.
std::vector<StrictNCategory> embedding_search(const std::vector<StrictNCategory>& parts,
                                              const std::vector<StrictNCategory>& catalogue);

}  // namespace ncat
