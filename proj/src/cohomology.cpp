#include "ncat/cohomology.hpp"

#include <sstream>
#include <unordered_map>

namespace ncat {

namespace {

void require_one_category(const StrictNCategory& c) {
  if (c.dimension() != 1) {
    throw Error(Errc::wrong_dimension, "nerve computations need a 1-category, got dimension " +
                                           std::to_string(c.dimension()));
  }
}

std::string simplex_name(const StrictNCategory& c, const NerveSimplex& s) {
  if (s.arrows.empty()) return c.name(s.vertices.front());
  std::string out;
  for (CellId a : s.arrows) out += (out.empty() ? "" : "|") + c.name(a);
  return "(" + out + ")";
}

bool equal_mod(const IntMatrix& a, const IntMatrix& b, const AbelianGroup& to) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return reduce_mod_relations(a - b, to).is_zero();
}

IntMatrix reduce_rows(IntMatrix m, const std::vector<Integer>& orders) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (orders[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_fdiv_r(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), orders[r].get_mpz_t());
    }
  }
  return m;
}

}  // namespace

std::vector<NerveSimplex> nerve_simplices(const StrictNCategory& c, int n) {
  require_one_category(c);
  if (n < 0) throw Error(Errc::out_of_range, "negative simplex dimension");
  std::vector<NerveSimplex> out;
  if (n == 0) {
    for (CellId x : c.objects()) out.push_back({{x}, {}});
    return out;
  }
  std::unordered_map<CellId, std::vector<CellId>> outgoing;
  for (CellId a : c.cells_of_dim(1)) outgoing[*c.cell(a).src].push_back(a);
  NerveSimplex cur;
  std::function<void()> extend = [&]() {
    if (cur.dim() == n) {
      out.push_back(cur);
      return;
    }
    for (CellId a : outgoing[cur.vertices.back()]) {
      cur.arrows.push_back(a);
      cur.vertices.push_back(*c.cell(a).tgt);
      extend();
      cur.arrows.pop_back();
      cur.vertices.pop_back();
    }
  };
  for (CellId a : c.cells_of_dim(1)) {
    cur = {{*c.cell(a).src, *c.cell(a).tgt}, {a}};
    extend();
  }
  return out;
}

NerveSimplex simplex_coface(const StrictNCategory& c, const NerveSimplex& g, int i) {
  const int n = g.dim();
  if (n < 1 || i < 0 || i > n) {
    throw Error(Errc::out_of_range, "coface index " + std::to_string(i) + " on a " +
                                        std::to_string(n) + "-simplex");
  }
  NerveSimplex f;
  for (int k = 0; k <= n; ++k) {
    if (k != i) f.vertices.push_back(g.vertices[k]);
  }
  for (int k = 0; k < n; ++k) {
    // arrows[k] joins vertices k and k+1.
    if (i == 0 && k == 0) continue;
    if (i == n && k == n - 1) continue;
    if (i > 0 && i < n && k == i - 1) {
      auto comp = c.composite(0, g.arrows[k], g.arrows[k + 1]);
      if (!comp) {
        throw Error(Errc::invalid_argument, "composite of " + c.name(g.arrows[k]) + " and " +
                                                c.name(g.arrows[k + 1]) + " is not tabulated");
      }
      f.arrows.push_back(*comp);
      ++k;
      continue;
    }
    f.arrows.push_back(g.arrows[k]);
  }
  return f;
}

NerveSimplex simplex_codegeneracy(const StrictNCategory& c, const NerveSimplex& f, int j) {
  const int n = f.dim();
  if (j < 0 || j > n) {
    throw Error(Errc::out_of_range, "codegeneracy index " + std::to_string(j) + " on a " +
                                        std::to_string(n) + "-simplex");
  }
  const CellId x = f.vertices[j];
  auto id = c.identity(x);
  if (!id) throw Error(Errc::invalid_argument, "object " + c.name(x) + " has no identity");
  NerveSimplex g = f;
  g.vertices.insert(g.vertices.begin() + j, x);
  g.arrows.insert(g.arrows.begin() + j, *id);
  return g;
}

bool is_degenerate(const StrictNCategory& c, const NerveSimplex& s) {
  return std::any_of(s.arrows.begin(), s.arrows.end(),
                     [&](CellId a) { return c.is_identity_cell(a); });
}

CoefficientSystem constant_system(const AbelianGroup& a, int max_degree) {
  const IntMatrix id = IntMatrix::identity(a.generator_count());
  CoefficientSystem t;
  t.max_degree = max_degree;
  t.group = [a](const NerveSimplex&) { return a; };
  t.coface = [id](const NerveSimplex&, int) { return id; };
  t.codegeneracy = [id](const NerveSimplex&, int) { return id; };
  return t;
}

ValidationReport validate_group_functor(const StrictNCategory& c, const GroupFunctor& m) {
  require_one_category(c);
  ValidationReport report;
  for (CellId x : c.objects()) {
    auto it = m.objects.find(x);
    if (it == m.objects.end()) {
      report.push_back({"functor-object", {c.name(x)}, "no group assigned"});
    } else if (!it->second.valid()) {
      report.push_back({"functor-object", {c.name(x)}, "torsion is not a divisibility chain"});
    }
  }
  if (!report.empty()) return report;
  auto matrix = [&](CellId a) -> std::optional<IntMatrix> {
    if (auto it = m.arrows.find(a); it != m.arrows.end()) return it->second;
    if (c.is_identity_cell(a)) {
      return IntMatrix::identity(m.objects.at(*c.cell(a).src).generator_count());
    }
    return std::nullopt;
  };
  for (CellId a : c.cells_of_dim(1)) {
    const auto& from = m.objects.at(*c.cell(a).src);
    const auto& to = m.objects.at(*c.cell(a).tgt);
    auto mat = matrix(a);
    if (!mat) {
      report.push_back({"functor-arrow", {c.name(a)}, "no matrix assigned"});
      continue;
    }
    if (mat->rows() != to.generator_count() || mat->cols() != from.generator_count()) {
      report.push_back({"functor-arrow", {c.name(a)}, "matrix has the wrong shape"});
      continue;
    }
    if (!respects_torsion(*mat, from, to)) {
      report.push_back({"functor-torsion", {c.name(a)}, "matrix does not respect torsion"});
    }
    if (c.is_identity_cell(a) && !equal_mod(*mat, IntMatrix::identity(from.generator_count()), to)) {
      report.push_back({"functor-identity", {c.name(a)}, "identity arrow not sent to identity"});
    }
  }
  if (!report.empty()) return report;
  c.for_each_composite(0, [&](CellId a, CellId b, CellId r) {
    const auto& to = m.objects.at(*c.cell(r).tgt);
    if (!equal_mod(*matrix(b) * *matrix(a), *matrix(r), to)) {
      report.push_back({"functor-composition", {c.name(a), c.name(b), c.name(r)},
                        "M(" + c.name(b) + ")·M(" + c.name(a) + ") != M(" + c.name(r) + ")"});
    }
  });
  return report;
}

CoefficientSystem system_from_functor(const StrictNCategory& c, const GroupFunctor& m,
                                      int max_degree) {
  auto report = validate_group_functor(c, m);
  if (!report.empty()) {
    std::string msg = "coefficient functor is not functorial:";
    for (const auto& v : report) msg += "\n  " + format_violation(v);
    throw Error(Errc::functoriality, msg);
  }
  auto objects = std::make_shared<std::map<CellId, AbelianGroup>>(m.objects);
  auto arrows = std::make_shared<std::map<CellId, IntMatrix>>();
  for (CellId a : c.cells_of_dim(1)) {
    auto it = m.arrows.find(a);
    (*arrows)[a] = it != m.arrows.end()
                       ? it->second
                       : IntMatrix::identity(objects->at(*c.cell(a).src).generator_count());
  }
  CoefficientSystem t;
  t.max_degree = max_degree;
  t.group = [objects](const NerveSimplex& f) { return objects->at(f.vertices.back()); };
  t.coface = [objects, arrows](const NerveSimplex& g, int i) {
    if (i == g.dim()) return arrows->at(g.arrows.back());
    return IntMatrix::identity(objects->at(g.vertices.back()).generator_count());
  };
  t.codegeneracy = [objects](const NerveSimplex& f, int) {
    return IntMatrix::identity(objects->at(f.vertices.back()).generator_count());
  };
  return t;
}

ValidationReport validate_system(const StrictNCategory& c, const CoefficientSystem& t) {
  require_one_category(c);
  ValidationReport report;
  const int top = t.max_degree;
  auto name = [&](const NerveSimplex& s) { return simplex_name(c, s); };
  auto check_map = [&](const IntMatrix& m, const NerveSimplex& from, const NerveSimplex& to,
                       const std::string& what) {
    const auto a = t.group(from);
    const auto b = t.group(to);
    if (m.rows() != b.generator_count() || m.cols() != a.generator_count()) {
      report.push_back({"matrix-shape", {name(to)}, what + " has the wrong shape"});
      return false;
    }
    if (!respects_torsion(m, a, b)) {
      report.push_back({"torsion", {name(to)}, what + " does not respect torsion"});
      return false;
    }
    return true;
  };

  std::vector<std::vector<NerveSimplex>> simplices;
  for (int n = 0; n <= top; ++n) simplices.push_back(nerve_simplices(c, n));
  for (int n = 0; n <= top; ++n) {
    for (const auto& f : simplices[n]) {
      if (!t.group(f).valid()) report.push_back({"group", {name(f)}, "invalid presentation"});
      for (int i = 0; n >= 1 && i <= n; ++i) {
        check_map(t.coface(f, i), simplex_coface(c, f, i), f, "D(" + std::to_string(i) + ")");
      }
      for (int j = 0; n < top && j <= n; ++j) {
        check_map(t.codegeneracy(f, j), simplex_codegeneracy(c, f, j), f,
                  "S(" + std::to_string(j) + ")");
      }
    }
  }
  if (!report.empty()) return report;

  auto D = [&](const NerveSimplex& g, int i) { return t.coface(g, i); };
  auto S = [&](const NerveSimplex& f, int j) { return t.codegeneracy(f, j); };
  auto d = [&](const NerveSimplex& g, int i) { return simplex_coface(c, g, i); };
  auto s = [&](const NerveSimplex& f, int j) { return simplex_codegeneracy(c, f, j); };
  auto expect = [&](const IntMatrix& lhs, const IntMatrix& rhs, const NerveSimplex& at,
                    const std::string& law, const std::string& detail) {
    if (!equal_mod(lhs, rhs, t.group(at))) report.push_back({law, {name(at)}, detail});
  };

  for (int m = 2; m <= top; ++m) {
    for (const auto& g : simplices[m]) {
      for (int j = 1; j <= m; ++j) {
        for (int i = 0; i < j; ++i) {
          expect(D(g, j) * D(d(g, j), i), D(g, i) * D(d(g, i), j - 1), g, "coface-coface",
                 "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
      }
    }
  }
  for (int n = 0; n + 1 <= top; ++n) {
    for (const auto& f : simplices[n]) {
      for (int j = 0; j <= n; ++j) {
        const auto sf = s(f, j);
        for (int i = 0; i <= n + 1; ++i) {
          const IntMatrix lhs = S(f, j) * D(sf, i);
          IntMatrix rhs;
          if (i == j || i == j + 1) {
            rhs = IntMatrix::identity(t.group(f).generator_count());
          } else if (i < j) {
            rhs = D(f, i) * S(d(f, i), j - 1);
          } else {
            rhs = D(f, i - 1) * S(d(f, i - 1), j);
          }
          expect(lhs, rhs, f, "codegeneracy-coface",
                 "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
      }
    }
  }
  for (int n = 0; n + 2 <= top; ++n) {
    for (const auto& f : simplices[n]) {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= j; ++i) {
          expect(S(f, j) * S(s(f, j), i), S(f, i) * S(s(f, i), j + 1), f,
                 "codegeneracy-codegeneracy", "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
      }
    }
  }
  return report;
}

CoefficientSystem pullback_system(const NFunctor& f, const CoefficientSystem& t) {
  auto image = [f](const NerveSimplex& s) {
    NerveSimplex out;
    for (CellId x : s.vertices) out.vertices.push_back(f(x));
    for (CellId a : s.arrows) out.arrows.push_back(f(a));
    return out;
  };
  CoefficientSystem p;
  p.max_degree = t.max_degree;
  p.group = [t, image](const NerveSimplex& s) { return t.group(image(s)); };
  p.coface = [t, image](const NerveSimplex& g, int i) { return t.coface(image(g), i); };
  p.codegeneracy = [t, image](const NerveSimplex& s, int j) {
    return t.codegeneracy(image(s), j);
  };
  return p;
}

std::string to_string(Convention c) { return c == Convention::full ? "full" : "paper"; }

Convention parse_convention(const std::string& text) {
  if (text == "full") return Convention::full;
  if (text == "paper") return Convention::paper;
  throw Error(Errc::parse, "unknown differential convention '" + text + "' (full|paper)");
}

CochainGroup cochain_group(const StrictNCategory& c, const CoefficientSystem& t, int n) {
  CochainGroup g;
  g.simplices = nerve_simplices(c, n);
  for (const auto& s : g.simplices) {
    g.offsets.push_back(g.orders.size());
    g.blocks.push_back(t.group(s));
    const auto& b = g.blocks.back();
    for (std::size_t k = 0; k < b.generator_count(); ++k) g.orders.push_back(b.generator_order(k));
  }
  return g;
}

IntMatrix cochain_relations(const CochainGroup& g) {
  std::size_t torsion = 0;
  for (const auto& o : g.orders) torsion += o != 0;
  IntMatrix rel(g.orders.size(), torsion);
  std::size_t k = 0;
  for (std::size_t r = 0; r < g.orders.size(); ++r) {
    if (g.orders[r] != 0) rel(r, k++) = g.orders[r];
  }
  return rel;
}

namespace {

void require_degree(const CoefficientSystem& t, int top) {
  if (top > t.max_degree) {
    throw Error(Errc::degree_overflow, "degree " + std::to_string(top) +
                                           " exceeds the coefficient bound N = " +
                                           std::to_string(t.max_degree));
  }
}

IntMatrix assemble(const StrictNCategory& c, const CoefficientSystem& t, const CochainGroup& src,
                   const CochainGroup& dst, int n, Convention conv) {
  std::map<NerveSimplex, std::size_t> index;
  for (std::size_t k = 0; k < src.simplices.size(); ++k) index.emplace(src.simplices[k], k);
  IntMatrix d(dst.orders.size(), src.orders.size());
  const int first = conv == Convention::full ? 0 : 1;
  for (std::size_t gi = 0; gi < dst.simplices.size(); ++gi) {
    const auto& g = dst.simplices[gi];
    for (int i = first; i <= n + 1; ++i) {
      const std::size_t fi = index.at(simplex_coface(c, g, i));
      const IntMatrix block = t.coface(g, i);
      if (block.rows() != dst.blocks[gi].generator_count() ||
          block.cols() != src.blocks[fi].generator_count()) {
        throw Error(Errc::invalid_argument, "coface matrix has the wrong shape");
      }
      const long sign = i % 2 == 0 ? 1 : -1;
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t col = 0; col < block.cols(); ++col) {
          d(dst.offsets[gi] + r, src.offsets[fi] + col) += sign * block(r, col);
        }
      }
    }
  }
  return d;
}

// H = {x : d x ∈ Rel_{n+1}} / (im d_prev + Rel_n).
AbelianGroup cohomology_of(const IntMatrix& d, const IntMatrix& rel_next, const IntMatrix& d_prev,
                           const IntMatrix& rel) {
  const std::size_t gens = d.cols();
  const IntMatrix ker = kernel_basis(d.hconcat(rel_next));
  const IntMatrix k = lattice_basis(ker.rows_range(0, gens));
  const IntMatrix b = d_prev.hconcat(rel);
  return subquotient(k, b);
}

void require_complex(const IntMatrix& square, int n, Convention conv) {
  if (!square.is_zero()) {
    throw Error(Errc::not_a_complex, "d∘d != 0 entering degree " + std::to_string(n) +
                                         " under the " + to_string(conv) +
                                         " convention; cohomology is undefined there");
  }
}

}  // namespace

IntMatrix differential_matrix(const StrictNCategory& c, const CoefficientSystem& t, int n,
                              Convention conv) {
  require_one_category(c);
  require_degree(t, n + 1);
  return assemble(c, t, cochain_group(c, t, n), cochain_group(c, t, n + 1), n, conv);
}

IntMatrix differential_square(const StrictNCategory& c, const CoefficientSystem& t, int n,
                              Convention conv) {
  require_one_category(c);
  require_degree(t, n + 2);
  const auto g0 = cochain_group(c, t, n);
  const auto g1 = cochain_group(c, t, n + 1);
  const auto g2 = cochain_group(c, t, n + 2);
  return reduce_rows(assemble(c, t, g1, g2, n + 1, conv) * assemble(c, t, g0, g1, n, conv),
                     g2.orders);
}

AbelianGroup thomason_cohomology(const StrictNCategory& c, const CoefficientSystem& t, int n,
                                 Convention conv) {
  require_one_category(c);
  if (n < 0) throw Error(Errc::out_of_range, "negative cohomological degree");
  require_degree(t, n + 1);
  const auto gn = cochain_group(c, t, n);
  const auto gn1 = cochain_group(c, t, n + 1);
  const IntMatrix dn = assemble(c, t, gn, gn1, n, conv);
  IntMatrix prev(gn.orders.size(), 0);
  if (n > 0) {
    const auto gp = cochain_group(c, t, n - 1);
    prev = assemble(c, t, gp, gn, n - 1, conv);
    require_complex(reduce_rows(dn * prev, gn1.orders), n, conv);
  }
  return cohomology_of(dn, cochain_relations(gn1), prev, cochain_relations(gn));
}

AbelianGroup thomason_cohomology_normalized(const StrictNCategory& c, const CoefficientSystem& t,
                                            int n, Convention conv) {
  require_one_category(c);
  if (n < 0) throw Error(Errc::out_of_range, "negative cohomological degree");
  require_degree(t, n + 1);
  // The codegeneracy maps must identify T(s_j f) with T(f).
  for (int m = 0; m <= n; ++m) {
    for (const auto& f : nerve_simplices(c, m)) {
      const auto a = t.group(f);
      for (int j = 0; j <= m; ++j) {
        if (t.group(simplex_codegeneracy(c, f, j)) != a ||
            !equal_mod(t.codegeneracy(f, j), IntMatrix::identity(a.generator_count()), a)) {
          throw Error(Errc::invalid_argument,
                      "normalized complex needs identity codegeneracy maps");
        }
      }
    }
  }
  auto nondegenerate = [&](const CochainGroup& g) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < g.simplices.size(); ++k) {
      if (is_degenerate(c, g.simplices[k])) continue;
      for (std::size_t r = 0; r < g.blocks[k].generator_count(); ++r) keep.push_back(g.offsets[k] + r);
    }
    return keep;
  };
  auto restricted_relations = [](const CochainGroup& g, const std::vector<std::size_t>& keep) {
    CochainGroup sub;
    for (std::size_t r : keep) sub.orders.push_back(g.orders[r]);
    return cochain_relations(sub);
  };
  const auto gn = cochain_group(c, t, n);
  const auto gn1 = cochain_group(c, t, n + 1);
  const auto kn = nondegenerate(gn);
  const auto kn1 = nondegenerate(gn1);
  const IntMatrix dn = assemble(c, t, gn, gn1, n, conv).submatrix(kn1, kn);
  IntMatrix prev(kn.size(), 0);
  if (n > 0) {
    const auto gp = cochain_group(c, t, n - 1);
    prev = assemble(c, t, gp, gn, n - 1, conv).submatrix(kn, nondegenerate(gp));
  }
  return cohomology_of(dn, restricted_relations(gn1, kn1), prev, restricted_relations(gn, kn));
}

CohomologyTree cohomology_tree(const FactorisationPlane& p, const SystemChooser& systems, int n,
                               Convention conv) {
  std::map<const FactorisationPlane*, std::pair<std::size_t, std::size_t>> coords;
  const auto levels = tree_levels(p);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = 0; j < levels[i].size(); ++j) coords[levels[i][j]] = {i + 1, j + 1};
  }
  std::function<CohomologyTree(const FactorisationPlane&)> build =
      [&](const FactorisationPlane& node) {
        const auto [i, j] = coords.at(&node);
        CohomologyTree out{AbelianGroup{}, node.tag, node.collapsed, {}};
        try {
          out.label = thomason_cohomology(node.label, systems(i, j, node.label), n, conv);
        } catch (const Error& e) {
          throw Error(e.code(), "vertex (" + std::to_string(i) + "," + std::to_string(j) +
                                    "): " + e.what());
        }
        for (const auto& child : node.children) out.children.push_back(build(child));
        return out;
      };
  return build(p);
}

CohomologyTree cohomology_tree(const FactorisationPlane& p, const AbelianGroup& constant, int n,
                               Convention conv) {
  const auto t = constant_system(constant, default_max_degree(n));
  return cohomology_tree(
      p, [&](std::size_t, std::size_t, const StrictNCategory&) { return t; }, n, conv);
}

namespace {

AbelianGroup group_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) return parse_group(j.get<std::string>());
  if (!j.is_object()) throw Error(Errc::parse, where + ": expected a group");
  std::vector<Integer> orders(j.value("rank", 0u), Integer(0));
  for (const auto& d : j.value("torsion", nlohmann::json::array())) {
    if (!d.is_number_integer() || d.get<long>() < 2) {
      throw Error(Errc::parse, where + ".torsion: orders must be integers >= 2");
    }
    orders.emplace_back(d.get<long>());
  }
  return AbelianGroup::from_orders(orders);
}

IntMatrix matrix_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::parse, where + ": expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(Errc::parse, where + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = j[r][c];
      if (v.is_number_integer()) {
        m(r, c) = v.get<long>();
      } else if (v.is_string()) {
        m(r, c) = Integer(v.get<std::string>());
      } else {
        throw Error(Errc::parse, where + ": entries must be integers");
      }
    }
  }
  return m;
}

}  // namespace

CoefficientSpec CoefficientSpec::shorthand(const std::string& text) {
  const std::string prefix = "const:";
  if (text.rfind(prefix, 0) != 0) {
    throw Error(Errc::parse, "coefficient shorthand must look like const:Z or const:Z/m");
  }
  const auto g = parse_group(text.substr(prefix.size()));
  return {nlohmann::json{{"constant", g.to_string()}}};
}

CoefficientSpec CoefficientSpec::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::parse, "coefficient file must hold a JSON object");
  if (!doc.contains("constant") && !doc.contains("objects") && !doc.contains("vertices")) {
    throw Error(Errc::parse, "coefficient file needs 'constant', 'objects' or 'vertices'");
  }
  return {doc};
}

CoefficientSystem CoefficientSpec::build(const StrictNCategory& c, int max_degree, std::size_t i,
                                         std::size_t j) const {
  const nlohmann::json* spec = &doc;
  if (doc.contains("vertices")) {
    const std::string key = std::to_string(i) + "," + std::to_string(j);
    if (doc["vertices"].contains(key)) {
      spec = &doc["vertices"][key];
    } else if (doc.contains("default")) {
      spec = &doc["default"];
    } else {
      throw Error(Errc::invalid_argument, "no coefficients for vertex (" + key + ")");
    }
  }
  if (spec->contains("constant")) {
    return constant_system(group_from_json((*spec)["constant"], "constant"), max_degree);
  }
  if (!spec->contains("objects")) throw Error(Errc::parse, "coefficients need 'objects'");
  GroupFunctor m;
  for (const auto& [name, g] : (*spec)["objects"].items()) {
    auto x = c.find(name);
    if (!x || c.dim(*x) != 0) throw Error(Errc::unknown_object, "objects." + name + ": not an object");
    m.objects[*x] = group_from_json(g, "objects." + name);
  }
  if (spec->contains("arrows")) {
    for (const auto& [name, mat] : (*spec)["arrows"].items()) {
      auto a = c.find(name);
      if (!a || c.dim(*a) != 1) throw Error(Errc::dangling_reference, "arrows." + name + ": not an arrow");
      m.arrows[*a] = matrix_from_json(mat, "arrows." + name);
    }
  }
  return system_from_functor(c, m, max_degree);
}

}  // namespace ncat
