#include <gtest/gtest.h>

#include <array>
#include <map>

#include "ncat/embeddings.hpp"
#include "ncat/factorisation.hpp"
#include "ncat/isomorphism.hpp"
#include "support.hpp"

namespace ncat {
namespace {

using testing::brute_force_isomorphic;
using testing::fixture;
using testing::shuffled_copy;

// Three objects, one 1-cell per ordered pair, and Z/2 worth of 2-cells on
// every 1-cell with both compositions given by addition mod 2.
StrictNCategory codiscrete_z2_groupoid() {
  StrictNCategory c(2);
  std::vector<CellId> obj;
  for (int i = 0; i < 3; ++i) obj.push_back(c.add_cell("x" + std::to_string(i), 0));
  std::map<std::pair<int, int>, CellId> arrow;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) arrow[{i, j}] = c.add_cell("f" + std::to_string(i) + std::to_string(j), 1, obj[i], obj[j]);
    }
  }
  synthesize_identities(c);
  for (int i = 0; i < 3; ++i) arrow[{i, i}] = *c.identity(obj[i]);
  std::map<std::pair<int, int>, std::array<CellId, 2>> two;
  for (const auto& [ij, e] : arrow) {
    two[ij] = {*c.identity(e), c.add_cell("t" + c.name(e), 2, e, e)};
  }
  for (const auto& [ij, e] : arrow) {
    for (const auto& [jk, f] : arrow) {
      if (ij.second != jk.first) continue;
      const std::pair<int, int> ik{ij.first, jk.second};
      c.set_composite(0, e, f, arrow.at(ik));
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) c.set_composite(0, two[ij][p], two[jk][q], two[ik][(p + q) % 2]);
      }
    }
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) c.set_composite(1, two[ij][p], two[ij][q], two[ij][(p + q) % 2]);
    }
  }
  return c;
}

// Oracle for one object and at most one extra 1-cell and 2-cell: try every
// boundary-respecting table for all three compositions, keep what
// validates, and dedupe by exhaustive isomorphism.
std::vector<StrictNCategory> brute_force_one_object() {
  std::vector<StrictNCategory> found;
  auto keep = [&](const StrictNCategory& c) {
    if (!validate(c).empty()) return;
    for (const auto& d : found) {
      if (brute_force_isomorphic(c, d)) return;
    }
    found.push_back(c);
  };

  for (int n1 = 0; n1 <= 1; ++n1) {
    // 1-cells: 0 = identity, 1 = f.
    const int k1 = 1 + n1;
    for (int t1 = 0; t1 < (1 << (k1 * k1)); ++t1) {
      auto comp1 = [&](int p, int q) { return (t1 >> (p * k1 + q)) & 1; };
      for (int n2 = 0; n2 <= 1; ++n2) {
        for (int bs = 0; bs < (n2 ? k1 : 1); ++bs) {
          for (int bt = 0; bt < (n2 ? k1 : 1); ++bt) {
            // 2-cells: identities on each 1-cell, then maybe a : bs ⇒ bt.
            std::vector<std::pair<int, int>> bnd;
            for (int p = 0; p < k1; ++p) bnd.emplace_back(p, p);
            if (n2) bnd.emplace_back(bs, bt);
            const int k2 = static_cast<int>(bnd.size());
            auto candidates = [&](int s, int t) {
              std::vector<int> out;
              for (int r = 0; r < k2; ++r) {
                if (bnd[r] == std::pair{s, t}) out.push_back(r);
              }
              return out;
            };
            // Composable pairs with their candidate results.
            std::vector<std::tuple<int, int, int, std::vector<int>>> slots;
            for (int a = 0; a < k2; ++a) {
              for (int b = 0; b < k2; ++b) {
                if (bnd[a].second == bnd[b].first) {
                  slots.emplace_back(1, a, b, candidates(bnd[a].first, bnd[b].second));
                }
                slots.emplace_back(0, a, b,
                                   candidates(comp1(bnd[a].first, bnd[b].first),
                                              comp1(bnd[a].second, bnd[b].second)));
              }
            }
            bool empty_slot = false;
            for (const auto& s : slots) empty_slot = empty_slot || std::get<3>(s).empty();
            if (empty_slot) continue;
            std::vector<std::size_t> choice(slots.size(), 0);
            while (true) {
              StrictNCategory c(2);
              const auto x = c.add_cell("x", 0);
              std::vector<CellId> ones{c.add_cell("id:x", 1, x, x)};
              c.set_identity(x, ones[0]);
              if (n1) ones.push_back(c.add_cell("f", 1, x, x));
              std::vector<CellId> twos;
              for (int r = 0; r < k2; ++r) {
                twos.push_back(c.add_cell(r < k1 ? "id:" + c.name(ones[r]) : "a", 2,
                                          ones[bnd[r].first], ones[bnd[r].second]));
                if (r < k1) c.set_identity(ones[r], twos[r]);
              }
              for (int p = 0; p < k1; ++p) {
                for (int q = 0; q < k1; ++q) c.set_composite(0, ones[p], ones[q], ones[comp1(p, q)]);
              }
              for (std::size_t s = 0; s < slots.size(); ++s) {
                const auto& [along, a, b, cand] = slots[s];
                c.set_composite(along, twos[a], twos[b], twos[cand[choice[s]]]);
              }
              keep(c);
              std::size_t s = 0;
              while (s < slots.size() && ++choice[s] == std::get<3>(slots[s]).size()) choice[s++] = 0;
              if (s == slots.size()) break;
            }
          }
        }
      }
    }
  }
  return found;
}

// Groups a catalogue by fingerprint and checks no two entries are isomorphic.
bool pairwise_non_isomorphic(const std::vector<StrictNCategory>& cats) {
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < cats.size(); ++i) buckets[fingerprint(cats[i])].push_back(i);
  for (const auto& [key, idx] : buckets) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (isomorphic(cats[idx[a]], cats[idx[b]])) return false;
      }
    }
  }
  return true;
}

TEST(ShiftMultiset, Examples) {
  auto m = shift_multiset(fixture("c_prime.cat"));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_TRUE(isomorphic(m[0].representative, identity_category(1)));
  EXPECT_EQ(m[0].multiplicity, 2u);
  EXPECT_TRUE(isomorphic(m[1].representative, fixture("c_double_prime.cat")));
  EXPECT_EQ(m[1].multiplicity, 2u);

  auto i2 = shift_multiset(fixture("i2.cat"));
  ASSERT_EQ(i2.size(), 1u);
  EXPECT_EQ(i2[0].multiplicity, 1u);

  try {
    shift_multiset(fixture("g3.cat"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::wrong_dimension);
  }
}

TEST(ShiftMultiset, CodiscreteGroupoid) {
  auto c = codiscrete_z2_groupoid();
  ASSERT_TRUE(validate(c).empty());
  auto m = shift_multiset(c);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].multiplicity, 9u);
  EXPECT_TRUE(isomorphic(m[0].representative, delta_shape_category(1, 2)));
}

TEST(ShiftMultiset, EqualityIgnoresOrderAndNames) {
  auto cpp = fixture("c_double_prime.cat");
  auto i1 = identity_category(1);
  auto a = multiset_of({i1, cpp, cpp, i1});
  auto b = multiset_of({shuffled_copy(cpp, 4).category, i1, i1, cpp});
  EXPECT_TRUE(multisets_equal(a, b));
  EXPECT_FALSE(multisets_equal(a, multiset_of({i1, cpp, cpp})));
  EXPECT_FALSE(multisets_equal(a, multiset_of({i1, cpp, cpp, cpp})));
  EXPECT_TRUE(multisets_equal(shift_multiset(fixture("c_prime.cat")), a));
  auto c = fixture("c_prime.cat");
  EXPECT_TRUE(shifts_equal(c, shuffled_copy(c, 9).category));
  EXPECT_FALSE(shifts_equal(c, fixture("i2.cat")));
}

TEST(Enumeration, MatchesBruteForceForOneObject) {
  const auto oracle = brute_force_one_object();
  const auto catalogue = enumerate_2categories(1, 1);
  ASSERT_EQ(catalogue.size(), oracle.size());
  EXPECT_EQ(catalogue.size(), 17u);
  for (const auto& c : catalogue) {
    int matches = 0;
    for (const auto& d : oracle) matches += brute_force_isomorphic(c, d);
    EXPECT_EQ(matches, 1) << to_json(c).dump();
  }
}

TEST(Enumeration, SmallCataloguesAreValidAndDistinct) {
  for (auto [m, k] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    auto cats = enumerate_2categories(m, k);
    for (const auto& c : cats) {
      ASSERT_TRUE(validate(c).empty());
      ASSERT_EQ(c.dimension(), 2);
      ASSERT_LE(static_cast<int>(c.objects().size()), m);
    }
    EXPECT_TRUE(pairwise_non_isomorphic(cats)) << m << " " << k;
  }
  EXPECT_EQ(enumerate_2categories(2, 1).size(), 45u);
  EXPECT_EQ(enumerate_2categories(1, 2).size(), 1241u);
}

TEST(Enumeration, RelabelledCopiesAreFound) {
  auto cats = enumerate_2categories(2, 1);
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < cats.size(); ++i) buckets[fingerprint(cats[i])].push_back(i);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    auto r = shuffled_copy(cats[i], static_cast<std::uint32_t>(i) + 1).category;
    int matches = 0;
    for (std::size_t j : buckets[fingerprint(r)]) matches += isomorphic(r, cats[j]);
    EXPECT_EQ(matches, 1) << i;
  }
  // Known members: the identity 2-category and the Z/2 delta shape.
  int hits = 0;
  for (const auto& c : cats) {
    hits += isomorphic(c, identity_category(2));
    hits += isomorphic(c, delta_shape_category(2, 2));
  }
  EXPECT_EQ(hits, 2);
}

TEST(Enumeration, VisitorCanStopEarly) {
  int seen = 0;
  enumerate_2categories(EnumerationBounds{2, 2}, [&](const StrictNCategory&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(EmbeddingSearch, SinglePartHits) {
  auto one = embedding_search({identity_category(1)}, 1, 3);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(isomorphic(one[0], identity_category(2)));

  auto z2 = embedding_search({delta_shape_category(1, 2)}, 1, 3);
  ASSERT_EQ(z2.size(), 1u);
  EXPECT_TRUE(isomorphic(z2[0], delta_shape_category(2, 2)));
}

TEST(EmbeddingSearch, ThreePoints) {
  const std::vector<StrictNCategory> parts(3, identity_category(1));
  auto hits = embedding_search(parts, 3, 3);
  ASSERT_EQ(hits.size(), 2u);
  for (const auto& h : hits) {
    EXPECT_TRUE(validate(h).empty());
    EXPECT_TRUE(multisets_equal(shift_multiset(h), multiset_of(parts)));
  }
  EXPECT_TRUE(pairwise_non_isomorphic(hits));
}

// Every enumerated category is found again from its own shift.
TEST(EmbeddingSearch, RoundTripCompleteness) {
  for (auto [m, k] : {std::pair{1, 1}, std::pair{2, 1}}) {
    for (const auto& c : enumerate_2categories(m, k)) {
      std::vector<StrictNCategory> parts;
      for (auto& p : shift(c)) parts.push_back(std::move(p.category));
      const auto hits = embedding_search(parts, m, k);
      int matches = 0;
      for (const auto& h : hits) matches += isomorphic(h, c);
      EXPECT_EQ(matches, 1);
    }
  }
}

TEST(EmbeddingSearch, CatalogueOverloadFilters) {
  auto cats = enumerate_2categories(2, 1);
  const std::vector<StrictNCategory> parts{identity_category(1), identity_category(1)};
  auto hits = embedding_search(parts, cats);
  ASSERT_FALSE(hits.empty());
  std::size_t expected = 0;
  for (const auto& c : cats) expected += multisets_equal(shift_multiset(c), multiset_of(parts));
  EXPECT_EQ(hits.size(), expected);
}

}  // namespace
}  // namespace ncat
