#pragma once
// Surface gluing: identify the sides of the 2e-gon according to the word and
// read off vertex orbits, Euler characteristic, genus, per-vertex degree and
// (for trivalent vertices of oriented words) the vertex sign. Also builds the
// dual triangulation of a maximal oriented word.

#include <array>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

enum class VertexSign { positive, negative, unsigned_ };

struct Vertex {
  int id = 0;
  int degree = 0;
  std::vector<int> corners;  // polygon corner positions in cyclic order
  VertexSign sign = VertexSign::unsigned_;
};

struct GluedGraph {
  int edge_count = 0;            // e
  int vertex_count = 0;          // v
  int euler_characteristic = 0;  // v - e + 1
  int genus = 0;                 // chi = 2-2g (oriented), 2-g (nonoriented)
  Mode mode = Mode::oriented;
  std::vector<Vertex> vertices;
  std::vector<int> corner_vertex;  // corner position -> vertex id

  std::vector<int> degrees() const {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (const Vertex& v : vertices) out.push_back(v.degree);
    return out;
  }
};

// Corner i sits between sides i-1 and i. Identified sides induce a bijection
// on corners (orientation-reversing for a same-exponent pair); vertices are
// the orbits, traversed in angular order. Throws std::logic_error if the
// Euler relation does not produce a positive integral genus.
GluedGraph glue(const WicksWord& word);

// Signs of the trivalent vertices of an oriented word, indexed like
// graph.vertices. Non-trivalent vertices come back unsigned_.
std::vector<VertexSign> vertex_signs(const WicksWord& word,
                                     const GluedGraph& graph);

bool is_maximal(const WicksWord& word);
bool is_maximal(const WicksWord& word, const GluedGraph& graph);

struct DualTriangulation {
  struct Slot {
    int triangle = -1;
    int side = -1;  // 0..2
  };
  int triangle_count = 0;
  // triangles[t][k] = letter index of the k-th side, in angular order
  std::vector<std::array<int, 3>> triangles;
  // edge_pairing[letter-1] = the two (triangle, side) slots glued together
  std::vector<std::array<Slot, 2>> edge_pairing;
};

// One triangle per (trivalent) vertex, one triangulation vertex overall;
// requires an oriented maximal word.
DualTriangulation dual_triangulation(const WicksWord& word);

}  // namespace wicks
