#include "ncat/isomorphism.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace ncat {

namespace {

using Signature = std::vector<std::size_t>;

// Per-cell invariants preserved by any isomorphism.
std::vector<Signature> cell_signatures(const StrictNCategory& c) {
  const int n = c.dimension();
  const std::size_t width = 5 + 3 * static_cast<std::size_t>(n);
  std::vector<Signature> sig(c.cell_count(), Signature(width, 0));
  for (CellId x = 0; x < c.cell_count(); ++x) {
    const auto& cell = c.cell(x);
    sig[x][0] = static_cast<std::size_t>(cell.dim);
    sig[x][1] = c.is_identity_cell(x) ? 1 : 0;
    sig[x][2] = (cell.src && cell.src == cell.tgt) ? 1 : 0;
    if (cell.src) ++sig[*cell.src][3];
    if (cell.tgt) ++sig[*cell.tgt][4];
  }
  for (int j = 0; j < n; ++j) {
    const std::size_t base = 5 + 3 * static_cast<std::size_t>(j);
    c.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
      ++sig[a][base];
      ++sig[b][base + 1];
      ++sig[r][base + 2];
    });
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const StrictNCategory& c, const StrictNCategory& d,
            const std::function<bool(const std::vector<CellId>&)>& visit)
      : c_(c), d_(d), visit_(visit) {}

  void run() {
    if (c_.dimension() != d_.dimension() || cell_counts(c_) != cell_counts(d_)) return;
    for (int j = 0; j < c_.dimension(); ++j) {
      if (c_.composite_count(j) != d_.composite_count(j)) return;
    }
    sig_c_ = cell_signatures(c_);
    sig_d_ = cell_signatures(d_);
    {
      auto a = sig_c_;
      auto b = sig_d_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return;
    }
    for (int dim = 0; dim <= c_.dimension(); ++dim) {
      for (CellId x : c_.cells_of_dim(dim)) {
        if (!c_.is_identity_cell(x)) order_.push_back(x);
      }
    }
    involving_.assign(c_.cell_count(), {});
    for (int j = 0; j < c_.dimension(); ++j) {
      c_.for_each_composite(j, [&](CellId a, CellId b, CellId r) {
        entries_.emplace_back(j, a, b, r);
      });
    }
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t e = 0; e < entries_.size(); ++e) {
      const auto& [j, a, b, r] = entries_[e];
      involving_[a].push_back(e);
      if (b != a) involving_[b].push_back(e);
      if (r != a && r != b) involving_[r].push_back(e);
    }
    map_.assign(c_.cell_count(), kUnset);
    used_.assign(d_.cell_count(), false);
    search(0);
  }

 private:
  static constexpr CellId kUnset = static_cast<CellId>(-1);

  bool entries_consistent(CellId x) const {
    for (std::size_t e : involving_[x]) {
      const auto& [j, a, b, r] = entries_[e];
      if (map_[a] == kUnset || map_[b] == kUnset || map_[r] == kUnset) continue;
      auto img = d_.composite(j, map_[a], map_[b]);
      if (!img || *img != map_[r]) return false;
    }
    return true;
  }

  // Maps x → y together with their identity towers; records every new
  // assignment in `trail` so it can be undone.
  bool assign(CellId x, CellId y, std::vector<CellId>& trail) {
    for (;;) {
      if (sig_c_[x] != sig_d_[y] || used_[y]) return false;
      const auto& cx = c_.cell(x);
      const auto& dy = d_.cell(y);
      if (cx.src) {
        if (map_[*cx.src] != *dy.src || map_[*cx.tgt] != *dy.tgt) return false;
      }
      map_[x] = y;
      used_[y] = true;
      trail.push_back(x);
      auto ix = c_.identity(x);
      auto iy = d_.identity(y);
      if (ix.has_value() != iy.has_value()) return false;
      if (!ix) return true;
      x = *ix;
      y = *iy;
    }
  }

  void undo(std::vector<CellId>& trail) {
    for (CellId x : trail) {
      used_[map_[x]] = false;
      map_[x] = kUnset;
    }
    trail.clear();
  }

  bool check_trail(const std::vector<CellId>& trail) const {
    for (CellId x : trail) {
      if (!entries_consistent(x)) return false;
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool search(std::size_t k) {
    if (k == order_.size()) {
      for (const auto& [j, a, b, r] : entries_) {
        auto img = d_.composite(j, map_[a], map_[b]);
        if (!img || *img != map_[r]) return true;
      }
      return visit_(map_);
    }
    const CellId x = order_[k];
    std::vector<CellId> trail;
    for (CellId y : d_.cells_of_dim(c_.dim(x))) {
      if (used_[y] || d_.is_identity_cell(y)) continue;
      const bool ok = assign(x, y, trail) && check_trail(trail);
      if (ok && !search(k + 1)) return false;
      undo(trail);
    }
    return true;
  }

  const StrictNCategory& c_;
  const StrictNCategory& d_;
  const std::function<bool(const std::vector<CellId>&)>& visit_;
  std::vector<Signature> sig_c_;
  std::vector<Signature> sig_d_;
  std::vector<CellId> order_;
  std::vector<std::tuple<int, CellId, CellId, CellId>> entries_;
  std::vector<std::vector<std::size_t>> involving_;
  std::vector<CellId> map_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_isomorphism(const StrictNCategory& c, const StrictNCategory& d,
                          const std::function<bool(const std::vector<CellId>&)>& visit) {
  IsoSearch(c, d, visit).run();
}

std::optional<NFunctor> are_isomorphic(std::shared_ptr<const StrictNCategory> c,
                                       std::shared_ptr<const StrictNCategory> d) {
  std::optional<NFunctor> found;
  for_each_isomorphism(*c, *d, [&](const std::vector<CellId>& map) {
    found = NFunctor{c, d, map};
    return false;
  });
  return found;
}

bool isomorphic(const StrictNCategory& c, const StrictNCategory& d) {
  bool found = false;
  for_each_isomorphism(c, d, [&](const std::vector<CellId>&) {
    found = true;
    return false;
  });
  return found;
}

std::string fingerprint(const StrictNCategory& c) {
  auto sig = cell_signatures(c);
  std::sort(sig.begin(), sig.end());
  std::ostringstream out;
  out << c.dimension() << '|';
  for (auto n : cell_counts(c)) out << n << ',';
  out << '|';
  for (int j = 0; j < c.dimension(); ++j) out << c.composite_count(j) << ',';
  for (const auto& s : sig) {
    out << '|';
    for (auto v : s) out << v << '.';
  }
  return out.str();
}

}  // namespace ncat
