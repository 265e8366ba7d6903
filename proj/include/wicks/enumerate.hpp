#pragma once
// Isomorph-free exhaustive generation of maximal Wicks forms at small genus.
// Backtracking search over first-appearance-normalized words: positions of
// the 2e-cycle are filled left to right, pruning on the no-cancellation /
// no-reducible-pair conditions, on corner orbits growing past size 3 (the
// glued graph of a maximal form is trivalent) and on prefix canonicity (the
// prefix must stay lexicographically minimal among all rotations of every
// completion). Each isomorphism class is emitted exactly once, as its
// canonical representative.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wicks/automorphisms.hpp"
#include "wicks/census.hpp"
#include "wicks/gluing.hpp"
#include "wicks/word.hpp"

namespace wicks {

struct Budget {
  std::uint64_t max_nodes = 2'000'000'000;
  double max_seconds = 600.0;
};

struct BudgetExceeded : std::runtime_error {
  std::uint64_t nodes_visited = 0;
  std::size_t entries_found = 0;
  BudgetExceeded(const std::string& what, std::uint64_t nodes,
                 std::size_t entries)
      : std::runtime_error(what), nodes_visited(nodes), entries_found(entries) {}
};

struct CensusEntry {
  WicksWord word;  // canonical representative
  AutDescriptor aut;
  int vertex_count = 0;
  int edge_count = 0;
  int euler_characteristic = 0;
  int genus = 0;
  std::vector<int> degrees;
  std::optional<ClassLabels> labels;  // oriented entries only
};

struct EnumOptions {
  int genus = 1;
  Mode mode = Mode::oriented;
  Budget budget{};
  int threads = 1;
};

// Complete, duplicate-free list of the isomorphism classes of maximal
// genus-g forms of the requested mode, sorted by canonical word. Throws
// BudgetExceeded (with partial progress attached) when a cap is hit.
std::vector<CensusEntry> enumerate_maximal(const EnumOptions& options);

std::vector<CensusEntry> enumerate_oriented_maximal(int genus,
                                                    Budget budget = {},
                                                    int threads = 1);
std::vector<CensusEntry> enumerate_nonoriented_maximal(int genus,
                                                       Budget budget = {},
                                                       int threads = 1);

// Compares the census masses (sum of 1/|Aut| per symmetry class) with the
// closed-form values, family by family.
struct MassCheck {
  std::string family;  // "m1", "m2(5)", "m3(2,1)", "m6(3;0,2)", ...
  Rational census_mass;
  Rational formula_mass;
  bool pass = false;
};

struct MassReport {
  int genus = 0;
  std::vector<MassCheck> checks;
  bool all_pass = false;
};

MassReport verify_masses(int genus, const std::vector<CensusEntry>& entries);

}  // namespace wicks
