#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "random_words.hpp"
#include "wicks/enumerate.hpp"

using namespace wicks;

namespace {

// Plain brute force, sharing no code with the backtracking generator: every
// pairing of the 2e positions, every second-occurrence sign pattern (first
// occurrences are positive, which every class hits), filtered by validate()
// and glue(), collected up to isomorphism.
void all_pairings(std::vector<int>& avail, std::vector<std::pair<int, int>>& acc,
                  const std::function<void(const std::vector<std::pair<int, int>>&)>& sink) {
  if (avail.empty()) {
    sink(acc);
    return;
  }
  int a = avail.front();
  for (size_t i = 1; i < avail.size(); ++i) {
    int b = avail[i];
    std::vector<int> rest;
    for (size_t j = 1; j < avail.size(); ++j)
      if (j != i) rest.push_back(avail[j]);
    acc.emplace_back(a, b);
    all_pairings(rest, acc, sink);
    acc.pop_back();
  }
}

struct BruteResult {
  std::set<std::vector<Symbol>> classes;
  // all first-appearance-normalized valid maximal linear words; by orbit
  // counting this must equal 2e times the census mass
  size_t linear_count = 0;
};

BruteResult brute_force_maximal(int genus, Mode mode) {
  const int n = mode == Mode::oriented ? 6 * (2 * genus - 1) : 6 * (genus - 1);
  const int letters = n / 2;
  const int target_v = mode == Mode::oriented ? 4 * genus - 2 : 2 * (genus - 1);
  BruteResult out;
  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i;
  std::vector<std::pair<int, int>> acc;
  all_pairings(positions, acc, [&](const std::vector<std::pair<int, int>>& pairs) {
    const int sign_patterns = mode == Mode::oriented ? 1 : (1 << letters);
    for (int bits = 0; bits < sign_patterns; ++bits) {
      std::vector<Symbol> symbols(n, 0);
      for (int l = 0; l < letters; ++l) {
        auto [p, q] = pairs[l];
        symbols[p] = l + 1;
        symbols[q] = mode == Mode::oriented ? -(l + 1)
                                            : ((bits >> l) & 1 ? l + 1 : -(l + 1));
      }
      WicksWord word = make_word(symbols, mode);
      if (normalize_linear(word.symbols) != word.symbols) continue;
      if (!validate(word).ok) continue;
      GluedGraph graph = glue(word);
      if (graph.vertex_count != target_v || graph.genus != genus) continue;
      ++out.linear_count;
      out.classes.insert(canonicalize(word).symbols);
    }
  });
  return out;
}

std::set<std::vector<Symbol>> canonical_set(const std::vector<CensusEntry>& entries) {
  std::set<std::vector<Symbol>> out;
  for (const CensusEntry& e : entries) out.insert(e.word.symbols);
  return out;
}

}  // namespace

TEST_CASE("genus-1 oriented census") {
  std::vector<CensusEntry> entries = enumerate_oriented_maximal(1);
  REQUIRE(entries.size() == 1);
  const CensusEntry& e = entries[0];
  CHECK(e.word.symbols == std::vector<Symbol>{1, 2, 3, -1, -2, -3});
  CHECK(e.aut.order == 6);
  CHECK(*e.aut.fixed_edges_r == 3);
  CHECK(*e.aut.fixed_vertices_s == 0);
  CHECK(*e.aut.fixed_vertices_t == 2);
  CHECK(e.genus == 1);
  CHECK(e.vertex_count == 2);
  CHECK(e.degrees == std::vector<int>{3, 3});
  REQUIRE(e.labels.has_value());
  CHECK(*e.labels->order6_label == std::array<int, 3>{3, 0, 2});
}

TEST_CASE("genus-1 generator matches plain brute force") {
  BruteResult brute = brute_force_maximal(1, Mode::oriented);
  auto gen = canonical_set(enumerate_oriented_maximal(1));
  CHECK(brute.classes == gen);
  CHECK(brute.classes.size() == 1);
  // orbit counting: normalized linear words = 2e * mass = 6 * (1/6)
  CHECK(brute.linear_count == 1);
}

TEST_CASE("nonoriented genus-2 census matches brute force") {
  BruteResult brute = brute_force_maximal(2, Mode::nonoriented);
  std::vector<CensusEntry> entries = enumerate_nonoriented_maximal(2);
  CHECK(canonical_set(entries) == brute.classes);
  // two classes of |Aut| = 2: mass 1, so 6 * 1 normalized linear words
  CHECK(brute.linear_count == 6);
  REQUIRE(entries.size() == 2);
  for (const CensusEntry& e : entries) {
    CHECK(e.genus == 2);
    CHECK(e.vertex_count == 2);
    CHECK(e.edge_count == 3);
    CHECK(e.degrees == std::vector<int>{3, 3});
    CHECK(e.aut.order == 2);
    CHECK(validate(e.word).ok);
  }
  // frozen canonical representatives
  CHECK(entries[0].word.symbols == std::vector<Symbol>{1, 1, 2, 3, 3, -2});
  CHECK(entries[1].word.symbols == std::vector<Symbol>{1, 2, 1, 3, -2, 3});
}

TEST_CASE("nonoriented genus-3 census matches brute force") {
  BruteResult brute = brute_force_maximal(3, Mode::nonoriented);
  std::vector<CensusEntry> entries = enumerate_nonoriented_maximal(3);
  CHECK(canonical_set(entries) == brute.classes);
  CHECK(entries.size() == 12);
  // mass 10 + 2/3: 12 * (32/3) = 128 normalized linear words
  CHECK(brute.linear_count == 128);
  std::map<int, int> hist;
  for (const CensusEntry& e : entries) {
    ++hist[e.aut.order];
    CHECK(e.genus == 3);
    CHECK(e.vertex_count == 4);
    CHECK(e.edge_count == 6);
    CHECK(e.word.length() == 12);
    CHECK(std::all_of(e.degrees.begin(), e.degrees.end(),
                      [](int d) { return d == 3; }));
    // some letter must repeat an exponent
    bool same = false;
    std::vector<int> seen(e.word.alphabet_size + 1, 0);
    for (Symbol s : e.word.symbols) {
      if (seen[index_of(s)] == sign_of(s)) same = true;
      seen[index_of(s)] = sign_of(s);
    }
    CHECK(same);
  }
  CHECK(hist == std::map<int, int>{{1, 10}, {3, 2}});
}

TEST_CASE("parallel search agrees with the single-threaded one") {
  auto seq = enumerate_nonoriented_maximal(3, Budget{}, 1);
  auto par = enumerate_nonoriented_maximal(3, Budget{}, 4);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i)
    CHECK(seq[i].word.symbols == par[i].word.symbols);
}

TEST_CASE("budget caps are hard errors with progress attached") {
  Budget tiny;
  tiny.max_nodes = 100;
  CHECK_THROWS_AS(enumerate_oriented_maximal(2, tiny), BudgetExceeded);
  try {
    enumerate_oriented_maximal(2, tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes_visited > 0);
  }
}

TEST_CASE("mass verification at genus 1") {
  std::vector<CensusEntry> entries = enumerate_oriented_maximal(1);
  MassReport report = verify_masses(1, entries);
  CHECK(report.all_pass);
  bool saw_m3 = false;
  for (const MassCheck& c : report.checks) {
    if (c.family == "m3(0,2)") {
      saw_m3 = true;
      CHECK(c.census_mass == Rational(1, 6));
      CHECK(c.formula_mass == Rational(1, 6));
    }
  }
  CHECK(saw_m3);
}

TEST_CASE("unsupported genus arguments") {
  CHECK_THROWS_AS(enumerate_nonoriented_maximal(1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_oriented_maximal(0), std::invalid_argument);
}

TEST_CASE("oriented censuses satisfy the fixed-structure constraints") {
  for (int g = 1; g <= 2; ++g) {
    std::vector<CensusEntry> entries = enumerate_oriented_maximal(g);
    int expected_v = 4 * g - 2;
    for (const CensusEntry& e : entries) {
      CHECK((e.aut.order == 1 || e.aut.order == 2 || e.aut.order == 3 ||
             e.aut.order == 6));
      if (e.aut.order % 2 == 0) {
        int r = *e.aut.fixed_edges_r;
        CHECK(r <= e.edge_count);
        CHECK((2 * g + 1 - r) >= 0);
        CHECK((2 * g + 1 - r) % 4 == 0);
      }
      if (e.aut.order % 3 == 0) {
        int s = *e.aut.fixed_vertices_s, t = *e.aut.fixed_vertices_t;
        CHECK(s % 3 == (2 * g + 1) % 3);
        CHECK(t % 3 == (2 * g) % 3);
        CHECK(s + t <= e.vertex_count);
      }
      // every vertex of a maximal form is trivalent and signed
      GluedGraph graph = glue(e.word);
      int signed_count = 0;
      for (const Vertex& v : graph.vertices)
        if (v.sign != VertexSign::unsigned_) ++signed_count;
      CHECK(signed_count == expected_v);
      // class labels carry exactly the families the order divides
      REQUIRE(e.labels.has_value());
      CHECK(e.labels->base);
      CHECK(e.labels->order2_r.has_value() == (e.aut.order % 2 == 0));
      CHECK(e.labels->order3_st.has_value() == (e.aut.order % 3 == 0));
      CHECK(e.labels->order6_label.has_value() == (e.aut.order == 6));
    }
  }
}

TEST_CASE("genus-3 oriented census matches the closed-form counts") {
  // deep cross-check: length-30 search against fully independent arithmetic
  std::vector<CensusEntry> entries =
      enumerate_oriented_maximal(3, Budget{}, 4);
  CHECK(entries.size() == 1726);
  std::map<int, int> hist;
  for (const CensusEntry& e : entries) ++hist[e.aut.order];
  CHECK(hist == std::map<int, int>{{1, 1615}, {2, 99}, {3, 11}, {6, 1}});
  CHECK(verify_masses(3, entries).all_pass);
}

TEST_CASE("census entries absorb random perturbations") {
  std::mt19937_64 rng(31337);
  std::vector<CensusEntry> entries = enumerate_nonoriented_maximal(3);
  std::set<std::vector<Symbol>> canon = canonical_set(entries);
  for (int i = 0; i < 500; ++i) {
    const CensusEntry& e = entries[rng() % entries.size()];
    WicksWord moved = relabeled(
        rotated(e.word, static_cast<int>(rng() % e.word.length())),
        testing::random_relabeling(rng, e.word.alphabet_size));
    CHECK(canon.count(canonicalize(moved).symbols) == 1);
  }
}
