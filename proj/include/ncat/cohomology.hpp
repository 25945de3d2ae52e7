#pragma once

// Thomason cohomology of finite 1-categories with coefficients in a natural
// system T on the simplex category Δ/C.
//
// T is covariant: the coface d^i gives D(g, i): T(d_i g) → T(g) and the
// codegeneracy s^j gives S(f, j): T(s_j f) → T(f). Groups are presented as
// Z^r ⊕ Z/d1 ⊕ ... on their generators and maps are integer matrices on
// those generators (columns = source generators).

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncat/category.hpp"
#include "ncat/factorisation.hpp"
#include "ncat/intlinalg.hpp"

namespace ncat {

/// A chain x0 → x1 → ... → xn of composable arrows (identities allowed).
struct NerveSimplex {
  std::vector<CellId> vertices;  // n+1 objects
  std::vector<CellId> arrows;    // n arrows, arrows[k] : vertices[k] → vertices[k+1]

  int dim() const { return static_cast<int>(arrows.size()); }
  auto operator<=>(const NerveSimplex&) const = default;
};

/// All n-simplices in lexicographic order of their arrows (objects for n = 0).
std::vector<NerveSimplex> nerve_simplices(const StrictNCategory& c, int n);

/// Drops vertex i of g (0 <= i <= dim g), composing the arrows around it.
NerveSimplex simplex_coface(const StrictNCategory& c, const NerveSimplex& g, int i);
/// Repeats vertex j of f (0 <= j <= dim f) by inserting its identity.
NerveSimplex simplex_codegeneracy(const StrictNCategory& c, const NerveSimplex& f, int j);
bool is_degenerate(const StrictNCategory& c, const NerveSimplex& s);

struct CoefficientSystem {
  int max_degree = 4;
  std::function<AbelianGroup(const NerveSimplex&)> group;
  /// D(g, i): T(d_i g) → T(g).
  std::function<IntMatrix(const NerveSimplex&, int)> coface;
  /// S(f, j): T(s_j f) → T(f).
  std::function<IntMatrix(const NerveSimplex&, int)> codegeneracy;
};

CoefficientSystem constant_system(const AbelianGroup& a, int max_degree = 4);

/// A functor C → finitely generated abelian groups, keyed by cell id of C.
struct GroupFunctor {
  std::map<CellId, AbelianGroup> objects;
  std::map<CellId, IntMatrix> arrows;  // identities may be omitted
};

ValidationReport validate_group_functor(const StrictNCategory& c, const GroupFunctor& m);

/// T(f) = M(last vertex of f); structure maps are M of the arrow from the
/// image of the last vertex to the last vertex. Throws Errc::functoriality.
CoefficientSystem system_from_functor(const StrictNCategory& c, const GroupFunctor& m,
                                      int max_degree = 4);

/// Well-definedness of every matrix and the cosimplicial identities, on all
/// simplices up to the system's degree bound.
ValidationReport validate_system(const StrictNCategory& c, const CoefficientSystem& t);

/// (F*T)(f) = T(F ∘ f).
CoefficientSystem pullback_system(const NFunctor& f, const CoefficientSystem& t);

enum class Convention { full, paper };

std::string to_string(Convention c);
Convention parse_convention(const std::string& text);

/// Generators of C^n = ⊕_f T(f) in simplex order, with the group of each block.
struct CochainGroup {
  std::vector<NerveSimplex> simplices;
  std::vector<AbelianGroup> blocks;
  std::vector<std::size_t> offsets;
  std::vector<Integer> orders;  // per generator, 0 for free generators
};

CochainGroup cochain_group(const StrictNCategory& c, const CoefficientSystem& t, int n);

/// d_n : C^n → C^{n+1}; block (g, f) = Σ (−1)^i D(g, i) over d_i g = f, with
/// i = 0..n+1 (full) or i = 1..n+1 (paper).
IntMatrix differential_matrix(const StrictNCategory& c, const CoefficientSystem& t, int n,
                              Convention conv = Convention::full);

/// d_{n+1} · d_n with torsion rows reduced to canonical representatives.
IntMatrix differential_square(const StrictNCategory& c, const CoefficientSystem& t, int n,
                              Convention conv = Convention::full);

/// Relations of C^n as columns (one per torsion generator).
IntMatrix cochain_relations(const CochainGroup& g);

AbelianGroup thomason_cohomology(const StrictNCategory& c, const CoefficientSystem& t, int n,
                                 Convention conv = Convention::full);

/// Same groups from the subcomplex of cochains vanishing on degenerate
/// simplices. Requires every codegeneracy map to be the identity.
AbelianGroup thomason_cohomology_normalized(const StrictNCategory& c, const CoefficientSystem& t,
                                            int n, Convention conv = Convention::full);

using CohomologyTree = LabelledTree<AbelianGroup>;

/// Chooses the coefficient system for plane vertex (i, j) (1-based).
using SystemChooser =
    std::function<CoefficientSystem(std::size_t i, std::size_t j, const StrictNCategory& label)>;

CohomologyTree cohomology_tree(const FactorisationPlane& p, const SystemChooser& systems, int n,
                               Convention conv = Convention::full);
CohomologyTree cohomology_tree(const FactorisationPlane& p, const AbelianGroup& constant, int n,
                               Convention conv = Convention::full);

/// Default degree bound for computing H^n.
inline int default_max_degree(int n) { return std::max(4, n + 1); }

/// Coefficient description read from a file or shorthand. `constant` or a
/// functor on the named cells of the vertex category; `vertices` overrides
/// per plane vertex "i,j".
struct CoefficientSpec {
  nlohmann::json doc;

  static CoefficientSpec shorthand(const std::string& text);  // const:Z, const:Z/m, const:<group>
  static CoefficientSpec from_json(const nlohmann::json& doc);

  /// Builds the system for a vertex category (i, j = 0 when not in a tree).
  CoefficientSystem build(const StrictNCategory& c, int max_degree, std::size_t i = 0,
                          std::size_t j = 0) const;
};

}  // namespace ncat
