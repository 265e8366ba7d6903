#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "random_words.hpp"
#include "wicks/automorphisms.hpp"

using namespace wicks;

namespace {
WicksWord hexagon() { return make_word({1, 2, 3, -1, -2, -3}, Mode::oriented); }
}  // namespace

TEST_CASE("hexagon has full rotation symmetry") {
  AutDescriptor aut = aut_group(hexagon());
  CHECK(aut.order == 6);
  CHECK(aut.generator_shift == 1);
  REQUIRE(aut.fixed_edges_r.has_value());
  CHECK(*aut.fixed_edges_r == 3);
  REQUIRE(aut.fixed_vertices_s.has_value());
  CHECK(*aut.fixed_vertices_s == 0);
  CHECK(*aut.fixed_vertices_t == 2);
}

TEST_CASE("automorphism shifts form the full subgroup") {
  std::vector<int> shifts = automorphism_shifts(hexagon());
  CHECK(shifts == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("letter bijection of the half turn") {
  // shift 3 sends each letter to its own inverse
  std::vector<Symbol> phi = letter_bijection(hexagon(), 3);
  CHECK(phi[1] == -1);
  CHECK(phi[2] == -2);
  CHECK(phi[3] == -3);
  CHECK(fixed_edge_count(hexagon(), 3) == 3);
}

TEST_CASE("fixed vertex counts of the order-3 element") {
  auto [s, t] = fixed_vertex_counts(hexagon(), 2);
  CHECK(s == 0);
  CHECK(t == 2);
}

TEST_CASE("shift validation") {
  CHECK_THROWS_AS(fixed_edge_count(hexagon(), 2), std::invalid_argument);
  CHECK_THROWS_AS(fixed_vertex_counts(hexagon(), 3), std::invalid_argument);
  // the commutator square has the full rotation group
  WicksWord square = make_word({1, 2, -1, -2}, Mode::oriented);
  CHECK(aut_group(square).order == 4);
  // the genus-2 double commutator only has the half turn
  WicksWord dbl = make_word({1, 2, -1, -2, 3, 4, -3, -4}, Mode::oriented);
  REQUIRE(validate(dbl).ok);
  CHECK(aut_group(dbl).order == 2);
  CHECK_THROWS_AS(letter_bijection(dbl, 1), std::invalid_argument);
  CHECK(fixed_edge_count(dbl, 4) == 0);  // swaps the two handles, no flips
}

TEST_CASE("aut order divides the length on random words") {
  std::mt19937_64 rng(135791113);
  for (int i = 0; i < 1000; ++i) {
    int letters = 2 + static_cast<int>(rng() % 6);
    Mode mode = rng() % 2 ? Mode::oriented : Mode::nonoriented;
    WicksWord w = testing::random_valid_word(rng, letters, mode);
    AutDescriptor aut = aut_group(w);
    CHECK(w.length() % aut.order == 0);
    if (aut.order > 1) CHECK(aut.generator_shift == w.length() / aut.order);
    // isomorphism invariance of the order
    WicksWord moved =
        relabeled(rotated(w, static_cast<int>(rng() % w.length())),
                  testing::random_relabeling(rng, letters));
    CHECK(aut_group(moved).order == aut.order);
  }
}

TEST_CASE("classify the hexagon") {
  ClassLabels labels = classify(hexagon());
  CHECK(labels.base);
  REQUIRE(labels.order2_r.has_value());
  CHECK(*labels.order2_r == 3);
  REQUIRE(labels.order3_st.has_value());
  CHECK(labels.order3_st->first == 0);
  CHECK(labels.order3_st->second == 2);
  REQUIRE(labels.order6_label.has_value());
  CHECK(*labels.order6_label == std::array<int, 3>{3, 0, 2});
}

TEST_CASE("classify rejects non-maximal words") {
  CHECK_THROWS_AS(classify(make_word({1, 2, -1, -2}, Mode::oriented)),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify(make_word({1, 1}, Mode::nonoriented)),
                  std::invalid_argument);
}

TEST_CASE("nonoriented descriptors carry the order only") {
  WicksWord w = make_word({1, 1}, Mode::nonoriented);
  AutDescriptor aut = aut_group(w);
  CHECK(aut.order == 2);
  CHECK_FALSE(aut.fixed_edges_r.has_value());
  CHECK_FALSE(aut.fixed_vertices_s.has_value());
}
