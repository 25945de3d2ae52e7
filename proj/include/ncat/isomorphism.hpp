#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncat/category.hpp"

namespace ncat {

/// Searches for a bijective functor C → D. Objects are assigned first, then
/// non-identity cells by ascending dimension; identities follow their cells.
/// Candidates are tried in declaration order, so the witness is reproducible.
std::optional<NFunctor> are_isomorphic(std::shared_ptr<const StrictNCategory> c,
                                       std::shared_ptr<const StrictNCategory> d);
bool isomorphic(const StrictNCategory& c, const StrictNCategory& d);

/// Calls `visit` with each isomorphism (as a cell map C → D) until it returns false.
void for_each_isomorphism(const StrictNCategory& c, const StrictNCategory& d,
                          const std::function<bool(const std::vector<CellId>&)>& visit);

/// Isomorphism-invariant summary; equal categories up to iso have equal
/// fingerprints, the converse need not hold.
std::string fingerprint(const StrictNCategory& c);

}  // namespace ncat
