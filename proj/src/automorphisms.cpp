#include "wicks/automorphisms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wicks {

namespace {

std::vector<Symbol> rotated_symbols(const std::vector<Symbol>& w, int k) {
  std::vector<Symbol> out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

bool is_automorphism_shift(const WicksWord& word, int shift,
                           const std::vector<Symbol>& base_norm) {
  return normalize_linear(rotated_symbols(word.symbols, shift)) == base_norm;
}

}  // namespace

std::vector<int> automorphism_shifts(const WicksWord& word) {
  const int n = word.length();
  std::vector<Symbol> base = normalize_linear(word.symbols);
  std::vector<int> shifts;
  for (int k = 0; k < n; ++k)
    if (is_automorphism_shift(word, k, base)) shifts.push_back(k);
  return shifts;
}

std::vector<Symbol> letter_bijection(const WicksWord& word, int shift) {
  const auto& w = word.symbols;
  const int n = word.length();
  shift = ((shift % n) + n) % n;
  std::vector<Symbol> phi(word.alphabet_size + 1, 0);
  for (int j = 0; j < n; ++j) {
    Symbol from = w[j];
    Symbol to = w[(j + shift) % n];
    Symbol image = sign_of(from) > 0 ? to : inverse_of(to);
    Symbol& slot = phi[index_of(from)];
    if (slot == 0)
      slot = image;
    else if (slot != image)
      throw std::invalid_argument("shift " + std::to_string(shift) +
                                  " is not an automorphism of the word");
  }
  return phi;
}

int fixed_edge_count(const WicksWord& word, int shift) {
  const int n = word.length();
  shift = ((shift % n) + n) % n;
  if (shift == 0 || (2 * shift) % n != 0)
    throw std::invalid_argument("shift " + std::to_string(shift) +
                                " does not have order 2 in Z/" +
                                std::to_string(n) + "Z");
  std::vector<Symbol> phi = letter_bijection(word, shift);
  int r = 0;
  for (int i = 1; i <= word.alphabet_size; ++i)
    if (phi[i] == -i) ++r;
  return r;
}

std::pair<int, int> fixed_vertex_counts(const WicksWord& word, int shift) {
  if (word.mode != Mode::oriented)
    throw std::invalid_argument("fixed vertex signs need an oriented word");
  const int n = word.length();
  shift = ((shift % n) + n) % n;
  bool order3 = shift != 0 && (3 * shift) % n == 0;
  if (!order3)
    throw std::invalid_argument("shift " + std::to_string(shift) +
                                " does not have order 3 in Z/" +
                                std::to_string(n) + "Z");
  letter_bijection(word, shift);  // throws unless it really is a symmetry
  GluedGraph g = glue(word);
  int s = 0, t = 0;
  for (const Vertex& v : g.vertices) {
    bool fixed = true;
    for (int c : v.corners)
      if (g.corner_vertex[(c + shift) % n] != v.id) {
        fixed = false;
        break;
      }
    if (!fixed) continue;
    if (v.sign == VertexSign::positive) ++s;
    if (v.sign == VertexSign::negative) ++t;
  }
  return {s, t};
}

AutDescriptor aut_group(const WicksWord& word) {
  const int n = word.length();
  std::vector<int> shifts = automorphism_shifts(word);
  AutDescriptor out;
  out.order = static_cast<int>(shifts.size());
  if (n % out.order != 0)
    throw std::logic_error("automorphism shifts do not form a subgroup");
  out.generator_shift = out.order > 1 ? n / out.order : 0;
  for (size_t i = 0; i < shifts.size(); ++i)
    if (shifts[i] != static_cast<int>(i) * (n / out.order))
      throw std::logic_error("automorphism shifts do not form a subgroup");
  if (word.mode == Mode::oriented) {
    if (out.order % 2 == 0) out.fixed_edges_r = fixed_edge_count(word, n / 2);
    if (out.order % 3 == 0) {
      auto [s, t] = fixed_vertex_counts(word, n / 3);
      out.fixed_vertices_s = s;
      out.fixed_vertices_t = t;
    }
  }
  return out;
}

ClassLabels classify(const WicksWord& word) {
  if (word.mode != Mode::oriented)
    throw std::invalid_argument("classify needs an oriented word");
  if (!is_maximal(word))
    throw std::invalid_argument("classify needs a maximal word");
  AutDescriptor aut = aut_group(word);
  ClassLabels out;
  if (aut.fixed_edges_r) out.order2_r = *aut.fixed_edges_r;
  if (aut.fixed_vertices_s)
    out.order3_st = std::pair{*aut.fixed_vertices_s, *aut.fixed_vertices_t};
  if (aut.order == 6) {
    int r = *aut.fixed_edges_r;
    int s = *aut.fixed_vertices_s;
    int t = *aut.fixed_vertices_t;
    if (r % 3 != 0 || s % 2 != 0 || t % 2 != 0)
      throw std::logic_error("order-6 statistics violate divisibility");
    out.order6_label = std::array{r, s, t};
  }
  return out;
}

}  // namespace wicks
