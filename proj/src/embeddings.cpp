#include "ncat/embeddings.hpp"

#include <map>
#include <string>

#include "ncat/factorisation.hpp"
#include "ncat/isomorphism.hpp"

namespace ncat {

ShiftMultiset multiset_of(const std::vector<StrictNCategory>& parts) {
  ShiftMultiset out;
  for (const auto& p : parts) {
    bool found = false;
    for (auto& cls : out) {
      if (isomorphic(cls.representative, p)) {
        ++cls.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({p, 1});
  }
  return out;
}

ShiftMultiset shift_multiset(const StrictNCategory& c) {
  if (c.dimension() != 2) {
    throw Error(Errc::wrong_dimension, "shift multisets are defined for 2-categories");
  }
  std::vector<StrictNCategory> parts;
  for (auto& part : shift(c)) parts.push_back(std::move(part.category));
  return multiset_of(parts);
}

bool multisets_equal(const ShiftMultiset& a, const ShiftMultiset& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& cls : a) {
    bool matched = false;
    for (std::size_t k = 0; k < b.size() && !matched; ++k) {
      if (!used[k] && b[k].multiplicity == cls.multiplicity &&
          isomorphic(cls.representative, b[k].representative)) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool shifts_equal(const StrictNCategory& c, const StrictNCategory& d) {
  return multisets_equal(shift_multiset(c), shift_multiset(d));
}

namespace {

constexpr int kNone = -1;

// Underlying 1-category: cells 0..m-1 are the identities of the objects.
struct Skeleton {
  int m = 0;
  std::vector<int> src, tgt;
  std::vector<std::vector<int>> comp;  // comp[a][b] = b ∘ a

  int cells() const { return static_cast<int>(src.size()); }
};

bool associative(const Skeleton& s) {
  const int n = s.cells();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = s.comp[a][b];
      if (ab == kNone) continue;
      for (int c = 0; c < n; ++c) {
        const int bc = s.comp[b][c];
        if (bc == kNone) continue;
        const int l = s.comp[ab][c];
        const int r = s.comp[a][bc];
        if (l != kNone && r != kNone && l != r) return false;
      }
    }
  }
  return true;
}

// The 2-cell layer over a skeleton: 2-cells 0..N1-1 are identities of 1-cells.
struct Layer {
  const Skeleton* sk = nullptr;
  std::vector<int> s2, t2;
  std::vector<std::vector<int>> vert;  // vert[a][b] = b ∘_1 a
  std::vector<std::vector<int>> rw;    // rw[h][a] = h ∘_0 a  (whiskering on the left of h)
  std::vector<std::vector<int>> lw;    // lw[a][k] = a ∘_0 k

  int n1() const { return sk->cells(); }
  int cells() const { return static_cast<int>(s2.size()); }
  int src0(int a) const { return sk->src[s2[a]]; }
  int tgt0(int a) const { return sk->tgt[s2[a]]; }

  int R(int h, int a) const {
    if (a == kNone) return kNone;
    if (h < sk->m) return a;
    if (a < n1()) return sk->comp[a][h];
    return rw[h][a];
  }
  int L(int a, int k) const {
    if (a == kNone) return kNone;
    if (k < sk->m) return a;
    if (a < n1()) return sk->comp[k][a];
    return lw[a][k];
  }
  int V(int a, int b) const { return a == kNone || b == kNone ? kNone : vert[a][b]; }
};

bool vertical_associative(const Layer& l) {
  const int n = l.cells();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = l.vert[a][b];
      if (ab == kNone) continue;
      for (int c = 0; c < n; ++c) {
        const int bc = l.vert[b][c];
        if (bc == kNone) continue;
        const int x = l.vert[ab][c];
        const int y = l.vert[a][bc];
        if (x != kNone && y != kNone && x != y) return false;
      }
    }
  }
  return true;
}

// Whiskering laws and interchange, skipping entries not chosen yet.
bool whiskers_consistent(const Layer& l) {
  const Skeleton& sk = *l.sk;
  const int n1 = l.n1();
  const int n2 = l.cells();
  auto same = [](int x, int y) { return x == kNone || y == kNone || x == y; };
  for (int h = sk.m; h < n1; ++h) {
    for (int a = 0; a < n2; ++a) {
      if (l.tgt0(a) != sk.src[h]) continue;
      for (int b = 0; b < n2; ++b) {
        const int ab = l.vert[a][b];
        if (ab != kNone && !same(l.R(h, ab), l.V(l.R(h, a), l.R(h, b)))) return false;
      }
    }
  }
  for (int k = sk.m; k < n1; ++k) {
    for (int a = 0; a < n2; ++a) {
      if (l.src0(a) != sk.tgt[k]) continue;
      for (int b = 0; b < n2; ++b) {
        const int ab = l.vert[a][b];
        if (ab != kNone && !same(l.L(ab, k), l.V(l.L(a, k), l.L(b, k)))) return false;
      }
    }
  }
  for (int a = n1; a < n2; ++a) {
    for (int h1 = 0; h1 < n1; ++h1) {
      if (sk.src[h1] != l.tgt0(a)) continue;
      for (int h2 = 0; h2 < n1; ++h2) {
        if (sk.src[h2] != sk.tgt[h1]) continue;
        if (!same(l.R(h2, l.R(h1, a)), l.R(sk.comp[h1][h2], a))) return false;
      }
    }
    for (int k1 = 0; k1 < n1; ++k1) {
      if (sk.tgt[k1] != l.src0(a)) continue;
      for (int k2 = 0; k2 < n1; ++k2) {
        if (sk.tgt[k2] != sk.src[k1]) continue;
        if (!same(l.L(l.L(a, k1), k2), l.L(a, sk.comp[k2][k1]))) return false;
      }
      for (int h = 0; h < n1; ++h) {
        if (sk.src[h] != l.tgt0(a)) continue;
        if (!same(l.R(h, l.L(a, k1)), l.L(l.R(h, a), k1))) return false;
      }
    }
  }
  // Interchange: (β whiskered by g) after (h whiskering α) equals
  // (k whiskering α) after (β whiskered by f).
  for (int a = n1; a < n2; ++a) {
    for (int b = n1; b < n2; ++b) {
      if (l.src0(b) != l.tgt0(a)) continue;
      const int lhs = l.V(l.R(l.s2[b], a), l.L(b, l.t2[a]));
      const int rhs = l.V(l.L(b, l.s2[a]), l.R(l.t2[b], a));
      if (!same(lhs, rhs)) return false;
    }
  }
  return true;
}

StrictNCategory build(const Layer& l) {
  const Skeleton& sk = *l.sk;
  StrictNCategory c(2);
  std::vector<CellId> one(sk.cells()), two(l.cells());
  for (int x = 0; x < sk.m; ++x) c.add_cell("x" + std::to_string(x + 1), 0);
  for (int f = 0; f < sk.cells(); ++f) {
    const std::string name = f < sk.m ? "id:x" + std::to_string(f + 1)
                                      : "f" + std::to_string(f - sk.m + 1);
    one[f] = c.add_cell(name, 1, static_cast<CellId>(sk.src[f]), static_cast<CellId>(sk.tgt[f]));
    if (f < sk.m) c.set_identity(static_cast<CellId>(f), one[f]);
  }
  for (int a = 0; a < l.cells(); ++a) {
    const std::string name = a < l.n1() ? "id:" + c.name(one[a])
                                        : "a" + std::to_string(a - l.n1() + 1);
    two[a] = c.add_cell(name, 2, one[l.s2[a]], one[l.t2[a]]);
    if (a < l.n1()) c.set_identity(one[a], two[a]);
  }
  for (int f = 0; f < sk.cells(); ++f) {
    for (int g = 0; g < sk.cells(); ++g) {
      if (sk.comp[f][g] != kNone) c.set_composite(0, one[f], one[g], one[sk.comp[f][g]]);
    }
  }
  for (int a = 0; a < l.cells(); ++a) {
    for (int b = 0; b < l.cells(); ++b) {
      if (l.vert[a][b] != kNone) c.set_composite(1, two[a], two[b], two[l.vert[a][b]]);
      if (l.src0(b) == l.tgt0(a)) {
        const int h = l.V(l.R(l.s2[b], a), l.L(b, l.t2[a]));
        c.set_composite(0, two[a], two[b], two[h]);
      }
    }
  }
  return c;
}

class Enumerator {
 public:
  Enumerator(const EnumerationBounds& bounds,
             const std::function<bool(const StrictNCategory&)>& visit)
      : bounds_(bounds), visit_(visit) {}

  void run() {
    for (int m = 1; m <= bounds_.max_objects && !stop_; ++m) {
      for (auto& sk : skeletons(m)) {
        layers(sk);
        if (stop_) return;
      }
    }
  }

 private:
  // ---- 1-categories ----

  std::vector<Skeleton> skeletons(int m) {
    std::vector<Skeleton> out;
    std::vector<StrictNCategory> seen;
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (int k = 0; k <= bounds_.max_cells_per_dim; ++k) {
      if (bounds_.one_cells && static_cast<std::size_t>(m + k) != *bounds_.one_cells) continue;
      if (m == 0 && k > 0) break;
      std::vector<std::pair<int, int>> ends;
      endpoint_sets(m, k, 0, ends, [&](const std::vector<std::pair<int, int>>& e) {
        Skeleton sk;
        sk.m = m;
        for (int x = 0; x < m; ++x) {
          sk.src.push_back(x);
          sk.tgt.push_back(x);
        }
        for (const auto& [s, t] : e) {
          sk.src.push_back(s);
          sk.tgt.push_back(t);
        }
        const int n = sk.cells();
        sk.comp.assign(n, std::vector<int>(n, kNone));
        for (int f = 0; f < n; ++f) {
          sk.comp[sk.src[f]][f] = f;
          sk.comp[f][sk.tgt[f]] = f;
        }
        std::vector<std::pair<int, int>> open;
        for (int f = m; f < n; ++f) {
          for (int g = m; g < n; ++g) {
            if (sk.tgt[f] == sk.src[g]) open.emplace_back(f, g);
          }
        }
        fill_skeleton(sk, open, 0, [&](const Skeleton& done) {
          StrictNCategory c = build_one(done);
          const std::string fp = fingerprint(c);
          for (std::size_t idx : buckets[fp]) {
            if (isomorphic(seen[idx], c)) return;
          }
          buckets[fp].push_back(seen.size());
          seen.push_back(std::move(c));
          out.push_back(done);
        });
      });
    }
    return out;
  }

  template <class Fn>
  void endpoint_sets(int m, int k, int from, std::vector<std::pair<int, int>>& cur, Fn&& fn) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int p = from; p < m * m; ++p) {
      cur.emplace_back(p / m, p % m);
      endpoint_sets(m, k, p, cur, fn);
      cur.pop_back();
    }
  }

  template <class Fn>
  void fill_skeleton(Skeleton& sk, const std::vector<std::pair<int, int>>& open, std::size_t i,
                     Fn&& fn) {
    if (i == open.size()) {
      fn(sk);
      return;
    }
    const auto [f, g] = open[i];
    for (int r = 0; r < sk.cells(); ++r) {
      if (sk.src[r] != sk.src[f] || sk.tgt[r] != sk.tgt[g]) continue;
      sk.comp[f][g] = r;
      if (associative(sk)) fill_skeleton(sk, open, i + 1, fn);
    }
    sk.comp[f][g] = kNone;
  }

  static StrictNCategory build_one(const Skeleton& sk) {
    StrictNCategory c(1);
    std::vector<CellId> one(sk.cells());
    for (int x = 0; x < sk.m; ++x) c.add_cell("x" + std::to_string(x + 1), 0);
    for (int f = 0; f < sk.cells(); ++f) {
      one[f] = c.add_cell("c" + std::to_string(f), 1, static_cast<CellId>(sk.src[f]),
                          static_cast<CellId>(sk.tgt[f]));
      if (f < sk.m) c.set_identity(static_cast<CellId>(f), one[f]);
    }
    for (int f = 0; f < sk.cells(); ++f) {
      for (int g = 0; g < sk.cells(); ++g) {
        if (sk.comp[f][g] != kNone) c.set_composite(0, one[f], one[g], one[sk.comp[f][g]]);
      }
    }
    return c;
  }

  // ---- 2-cells ----

  void layers(const Skeleton& sk) {
    const int n1 = sk.cells();
    std::vector<std::pair<int, int>> parallel;
    for (int f = 0; f < n1; ++f) {
      for (int g = 0; g < n1; ++g) {
        if (sk.src[f] == sk.src[g] && sk.tgt[f] == sk.tgt[g]) parallel.emplace_back(f, g);
      }
    }
    for (int k = 0; k <= bounds_.max_cells_per_dim && !stop_; ++k) {
      if (bounds_.two_cells && static_cast<std::size_t>(n1 + k) != *bounds_.two_cells) continue;
      if (k > 0 && parallel.empty()) break;
      std::vector<int> chosen;
      boundary_sets(sk, parallel, k, 0, chosen);
    }
  }

  void boundary_sets(const Skeleton& sk, const std::vector<std::pair<int, int>>& parallel, int k,
                     std::size_t from, std::vector<int>& chosen) {
    if (stop_) return;
    if (static_cast<int>(chosen.size()) == k) {
      Layer l;
      l.sk = &sk;
      for (int f = 0; f < sk.cells(); ++f) {
        l.s2.push_back(f);
        l.t2.push_back(f);
      }
      for (int p : chosen) {
        l.s2.push_back(parallel[p].first);
        l.t2.push_back(parallel[p].second);
      }
      fill_vertical(l);
      return;
    }
    for (std::size_t p = from; p < parallel.size(); ++p) {
      chosen.push_back(static_cast<int>(p));
      boundary_sets(sk, parallel, k, p, chosen);
      chosen.pop_back();
    }
  }

  void fill_vertical(Layer& l) {
    const int n1 = l.n1();
    const int n2 = l.cells();
    l.vert.assign(n2, std::vector<int>(n2, kNone));
    for (int a = 0; a < n2; ++a) {
      l.vert[l.s2[a]][a] = a;
      l.vert[a][l.t2[a]] = a;
    }
    std::vector<std::pair<int, int>> open;
    for (int a = n1; a < n2; ++a) {
      for (int b = n1; b < n2; ++b) {
        if (l.t2[a] == l.s2[b]) open.emplace_back(a, b);
      }
    }
    vertical_step(l, open, 0);
  }

  void vertical_step(Layer& l, const std::vector<std::pair<int, int>>& open, std::size_t i) {
    if (stop_) return;
    if (i == open.size()) {
      start_whiskers(l);
      return;
    }
    const auto [a, b] = open[i];
    for (int r = 0; r < l.cells(); ++r) {
      if (l.s2[r] != l.s2[a] || l.t2[r] != l.t2[b]) continue;
      l.vert[a][b] = r;
      if (vertical_associative(l)) vertical_step(l, open, i + 1);
    }
    l.vert[a][b] = kNone;
  }

  struct Slot {
    bool right;  // rw[h][a] when true, lw[a][h] otherwise
    int h;
    int a;
  };

  void start_whiskers(Layer& l) {
    const Skeleton& sk = *l.sk;
    const int n1 = l.n1();
    const int n2 = l.cells();
    l.rw.assign(n1, std::vector<int>(n2, kNone));
    l.lw.assign(n2, std::vector<int>(n1, kNone));
    std::vector<Slot> slots;
    for (int a = n1; a < n2; ++a) {
      for (int h = sk.m; h < n1; ++h) {
        if (sk.src[h] == l.tgt0(a)) slots.push_back({true, h, a});
        if (sk.tgt[h] == l.src0(a)) slots.push_back({false, h, a});
      }
    }
    if (!whiskers_consistent(l)) return;
    whisker_step(l, slots, 0);
  }

  void whisker_step(Layer& l, const std::vector<Slot>& slots, std::size_t i) {
    if (stop_) return;
    if (i == slots.size()) {
      emit(l);
      return;
    }
    const Skeleton& sk = *l.sk;
    const auto& s = slots[i];
    const int want_s = s.right ? sk.comp[l.s2[s.a]][s.h] : sk.comp[s.h][l.s2[s.a]];
    const int want_t = s.right ? sk.comp[l.t2[s.a]][s.h] : sk.comp[s.h][l.t2[s.a]];
    int& slot = s.right ? l.rw[s.h][s.a] : l.lw[s.a][s.h];
    for (int r = 0; r < l.cells(); ++r) {
      if (l.s2[r] != want_s || l.t2[r] != want_t) continue;
      slot = r;
      if (whiskers_consistent(l)) whisker_step(l, slots, i + 1);
    }
    slot = kNone;
  }

  void emit(const Layer& l) {
    StrictNCategory c = build(l);
    if (!validate(c).empty()) return;
    const std::string fp = fingerprint(c);
    auto& bucket = buckets_[fp];
    for (std::size_t idx : bucket) {
      if (isomorphic(found_[idx], c)) return;
    }
    bucket.push_back(found_.size());
    found_.push_back(c);
    if (!visit_(c)) stop_ = true;
  }

  EnumerationBounds bounds_;
  const std::function<bool(const StrictNCategory&)>& visit_;
  std::vector<StrictNCategory> found_;
  std::map<std::string, std::vector<std::size_t>> buckets_;
  bool stop_ = false;
};

}  // namespace

void enumerate_2categories(const EnumerationBounds& bounds,
                           const std::function<bool(const StrictNCategory&)>& visit) {
  if (bounds.max_objects < 0 || bounds.max_cells_per_dim < 0) {
    throw Error(Errc::invalid_argument, "enumeration bounds must be non-negative");
  }
  Enumerator(bounds, visit).run();
}

std::vector<StrictNCategory> enumerate_2categories(int max_objects, int max_cells_per_dim) {
  std::vector<StrictNCategory> out;
  enumerate_2categories(EnumerationBounds{max_objects, max_cells_per_dim, {}, {}},
                        [&](const StrictNCategory& c) {
                          out.push_back(c);
                          return true;
                        });
  return out;
}

namespace {

void require_parts(const std::vector<StrictNCategory>& parts) {
  for (const auto& p : parts) {
    if (p.dimension() != 1) throw Error(Errc::wrong_dimension, "embedding parts must be 1-categories");
  }
}

}  // namespace

std::vector<StrictNCategory> embedding_search(const std::vector<StrictNCategory>& parts,
                                              int max_objects, int max_cells_per_dim) {
  require_parts(parts);
  // Objects of the parts are the 1-cells of a hit and their arrows its 2-cells.
  std::size_t ones = 0;
  std::size_t twos = 0;
  for (const auto& p : parts) {
    ones += p.objects().size();
    twos += p.cells_of_dim(1).size();
  }
  const auto wanted = multiset_of(parts);
  std::vector<StrictNCategory> hits;
  enumerate_2categories(EnumerationBounds{max_objects, max_cells_per_dim, ones, twos},
                        [&](const StrictNCategory& c) {
                          if (multisets_equal(shift_multiset(c), wanted)) hits.push_back(c);
                          return true;
                        });
  return hits;
}

std::vector<StrictNCategory> embedding_search(const std::vector<StrictNCategory>& parts,
                                              const std::vector<StrictNCategory>& catalogue) {
  require_parts(parts);
  const auto wanted = multiset_of(parts);
  std::vector<StrictNCategory> hits;
  for (const auto& c : catalogue) {
    if (c.dimension() != 2 || !multisets_equal(shift_multiset(c), wanted)) continue;
    bool duplicate = false;
    for (const auto& h : hits) duplicate = duplicate || isomorphic(h, c);
    if (!duplicate) hits.push_back(c);
  }
  return hits;
}

}  // namespace ncat
