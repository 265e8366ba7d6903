#pragma once
// Rotation symmetries of a cyclic word. Aut(w) is the subgroup of Z/2eZ of
// shifts k such that rot(w, k) equals w up to a letter bijection; for
// oriented maximal words it also carries the fixed-structure statistics:
// r = edges reversed onto themselves by the order-2 element, (s, t) = counts
// of positive/negative vertices fixed by an order-3 element.

#include <optional>
#include <utility>
#include <vector>

#include "wicks/gluing.hpp"
#include "wicks/word.hpp"

namespace wicks {

struct AutDescriptor {
  int order = 1;
  int generator_shift = 0;  // smallest nonzero shift in Aut(w); 0 if trivial
  std::optional<int> fixed_edges_r;      // set when the order is even
  std::optional<int> fixed_vertices_s;   // set when 3 | order (oriented only)
  std::optional<int> fixed_vertices_t;
};

// All shifts k in 0..2e-1 with rot(w, k) isomorphic to w as a linear word.
std::vector<int> automorphism_shifts(const WicksWord& word);

// The letter bijection phi with phi(w) = rot(w, shift), as a signed map
// (phi[i] = image of a_i). Throws if shift is not an automorphism.
std::vector<Symbol> letter_bijection(const WicksWord& word, int shift);

// r = #{ letters mapped to their own inverse }. The shift must be an
// automorphism of order exactly 2 (i.e. shift = e).
int fixed_edge_count(const WicksWord& word, int shift);

// (s, t) = positive/negative trivalent vertices whose corner orbit is mapped
// to itself. The shift must be an order-3 automorphism of an oriented word.
std::pair<int, int> fixed_vertex_counts(const WicksWord& word, int shift);

AutDescriptor aut_group(const WicksWord& word);

// Symmetry-class membership of an oriented maximal word. order6_label is the
// composite label (r; s, t) with 3 | r, 2 | s, 2 | t.
struct ClassLabels {
  bool base = true;  // every maximal form
  std::optional<int> order2_r;
  std::optional<std::pair<int, int>> order3_st;
  std::optional<std::array<int, 3>> order6_label;
};

ClassLabels classify(const WicksWord& word);

}  // namespace wicks
