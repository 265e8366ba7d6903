#include "wicks/gluing.hpp"

#include <algorithm>
#include <stdexcept>

namespace wicks {

namespace {

struct CornerWalk {
  std::vector<std::vector<int>> cycles;      // corners per vertex, in order
  std::vector<std::vector<int>> exit_sides;  // side crossed after corner k
};

// Walks the angular sectors around each glued vertex. From a corner we cross
// its exit side to the identified corner on the partner side: a same-exponent
// pair glues tail-to-tail/head-to-head, an opposite pair tail-to-head.
CornerWalk walk_corners(const WicksWord& word) {
  const auto& w = word.symbols;
  const int n = word.length();
  std::vector<int> partner(n, -1);
  {
    std::vector<int> first(word.alphabet_size + 1, -1);
    for (int p = 0; p < n; ++p) {
      int i = index_of(w[p]);
      if (first[i] < 0) {
        first[i] = p;
      } else {
        partner[first[i]] = p;
        partner[p] = first[i];
      }
    }
  }
  CornerWalk out;
  std::vector<bool> seen(n, false);
  for (int c0 = 0; c0 < n; ++c0) {
    if (seen[c0]) continue;
    std::vector<int> cycle, exits;
    int c = c0, exit_side = c0;
    while (true) {
      cycle.push_back(c);
      exits.push_back(exit_side);
      seen[c] = true;
      int s = exit_side;
      int q = partner[s];
      bool same = sign_of(w[s]) == sign_of(w[q]);
      int c2;
      if (c == s)  // tail end of side s
        c2 = same ? q : (q + 1) % n;
      else  // head end: c == s+1
        c2 = same ? (q + 1) % n : q;
      // entered corner c2 through the germ of side q; leave via its other germ
      exit_side = (q == c2) ? (c2 - 1 + n) % n : c2;
      c = c2;
      if (c == c0 && exit_side == c0) break;
    }
    out.cycles.push_back(std::move(cycle));
    out.exit_sides.push_back(std::move(exits));
  }
  return out;
}

VertexSign trivalent_sign(const WicksWord& word, const std::vector<int>& cycle) {
  const int n = word.length();
  // corner i pairs the arriving dart w[i-1] with the dart inverse(w[i]); the
  // vertex is positive when the three corners, in word order, chain these
  // dart pairs cyclically, negative when they chain in the other order
  std::array<int, 3> cs{cycle[0], cycle[1], cycle[2]};
  std::sort(cs.begin(), cs.end());
  std::array<Symbol, 3> u, v;
  for (int k = 0; k < 3; ++k) {
    u[k] = word.symbols[(cs[k] - 1 + n) % n];
    v[k] = inverse_of(word.symbols[cs[k]]);
  }
  if (v[0] == u[1]) {
    if (v[1] != u[2] || v[2] != u[0])
      throw std::logic_error("trivalent corner pattern is not a 3-cycle");
    return VertexSign::positive;
  }
  if (v[0] != u[2] || v[2] != u[1] || v[1] != u[0])
    throw std::logic_error("trivalent corner pattern is not a 3-cycle");
  return VertexSign::negative;
}

}  // namespace

GluedGraph glue(const WicksWord& word) {
  CornerWalk walk = walk_corners(word);
  GluedGraph g;
  g.mode = word.mode;
  g.edge_count = word.edge_count();
  g.vertex_count = static_cast<int>(walk.cycles.size());
  g.euler_characteristic = g.vertex_count - g.edge_count + 1;
  if (word.mode == Mode::oriented) {
    int twice_genus = 2 - g.euler_characteristic;
    if (twice_genus <= 0 || twice_genus % 2 != 0)
      throw std::logic_error("oriented gluing yielded chi = " +
                             std::to_string(g.euler_characteristic));
    g.genus = twice_genus / 2;
  } else {
    g.genus = 2 - g.euler_characteristic;
    if (g.genus <= 0)
      throw std::logic_error("nonoriented gluing yielded chi = " +
                             std::to_string(g.euler_characteristic));
  }
  g.corner_vertex.assign(word.length(), -1);
  // order vertices by their smallest corner so output is deterministic
  std::sort(walk.cycles.begin(), walk.cycles.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });
  for (size_t i = 0; i < walk.cycles.size(); ++i) {
    Vertex v;
    v.id = static_cast<int>(i);
    v.corners = walk.cycles[i];
    v.degree = static_cast<int>(v.corners.size());
    if (word.mode == Mode::oriented && v.degree == 3)
      v.sign = trivalent_sign(word, v.corners);
    for (int c : v.corners) g.corner_vertex[c] = v.id;
    g.vertices.push_back(std::move(v));
  }
  return g;
}

std::vector<VertexSign> vertex_signs(const WicksWord& word,
                                     const GluedGraph& graph) {
  if (word.mode != Mode::oriented)
    throw std::invalid_argument("vertex signs are defined for oriented words only");
  std::vector<VertexSign> out;
  out.reserve(graph.vertices.size());
  for (const Vertex& v : graph.vertices)
    out.push_back(v.degree == 3 ? trivalent_sign(word, v.corners)
                                : VertexSign::unsigned_);
  return out;
}

bool is_maximal(const WicksWord& word, const GluedGraph& graph) {
  int g = graph.genus;
  int bound = word.mode == Mode::oriented ? 6 * (2 * g - 1) : 6 * (g - 1);
  return word.length() == bound;
}

bool is_maximal(const WicksWord& word) { return is_maximal(word, glue(word)); }

DualTriangulation dual_triangulation(const WicksWord& word) {
  if (word.mode != Mode::oriented)
    throw std::invalid_argument("dual triangulation needs an oriented word");
  GluedGraph g = glue(word);
  if (!is_maximal(word, g))
    throw std::invalid_argument("dual triangulation needs a maximal word");

  CornerWalk walk = walk_corners(word);
  DualTriangulation dt;
  dt.triangle_count = static_cast<int>(walk.cycles.size());
  dt.triangles.resize(dt.triangle_count);
  dt.edge_pairing.assign(word.edge_count(), {});
  std::vector<int> slots_seen(word.edge_count(), 0);
  // one triangle per vertex, ordered by smallest corner like glue();
  // crossing side s contributes the edge |w[s]|
  std::vector<std::pair<int, int>> order;  // (min corner, walk cycle index)
  for (size_t i = 0; i < walk.cycles.size(); ++i)
    order.emplace_back(
        *std::min_element(walk.cycles[i].begin(), walk.cycles[i].end()),
        static_cast<int>(i));
  std::sort(order.begin(), order.end());
  for (int t = 0; t < dt.triangle_count; ++t) {
    const auto& exits = walk.exit_sides[order[t].second];
    if (exits.size() != 3)
      throw std::logic_error("non-trivalent vertex in a maximal word");
    for (int k = 0; k < 3; ++k) {
      int letter = index_of(word.symbols[exits[k]]);
      dt.triangles[t][k] = letter;
      int& seen = slots_seen[letter - 1];
      if (seen >= 2) throw std::logic_error("edge crossed more than twice");
      dt.edge_pairing[letter - 1][seen++] = {t, k};
    }
  }
  for (int i = 0; i < word.edge_count(); ++i)
    if (slots_seen[i] != 2)
      throw std::logic_error("edge " + std::to_string(i + 1) +
                             " not crossed exactly twice");
  return dt;
}

}  // namespace wicks
