#pragma once
// Cyclic words over a signed alphabet {a_1,...,a_l} u {inverses}: parsing,
// structural checks, validation of the oriented/nonoriented Wicks conditions,
// first-appearance normalization, canonical forms and isomorphism testing.
//
// A word is stored as a vector of nonzero ints: +i encodes a_i, -i encodes
// the inverse of a_i. Indices are dense (1..l), each occurring at exactly two
// positions; the word is read cyclically.

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wicks {

using Symbol = int;  // nonzero; sign selects the letter or its inverse

enum class Mode { oriented, nonoriented };

std::string_view mode_name(Mode mode);
Mode mode_from_name(std::string_view name);

inline int index_of(Symbol s) { return s < 0 ? -s : s; }
inline int sign_of(Symbol s) { return s < 0 ? -1 : +1; }
inline Symbol inverse_of(Symbol s) { return -s; }

// Total order on symbols: smaller index first, plain letter before inverse.
inline unsigned symbol_key(Symbol s) {
  return static_cast<unsigned>(index_of(s)) * 2u + (s < 0 ? 1u : 0u);
}
bool symbol_seq_less(std::span<const Symbol> a, std::span<const Symbol> b);

// Structural problems (bad multiplicities, odd length, ...) throw this;
// violations of the cyclic-word conditions are reported as data instead.
struct WordError : std::runtime_error {
  explicit WordError(const std::string& what) : std::runtime_error(what) {}
};

struct WicksWord {
  std::vector<Symbol> symbols;     // length 2e, interpreted cyclically
  Mode mode = Mode::oriented;
  int alphabet_size = 0;           // l; indices used are exactly 1..l
  std::vector<std::string> names;  // 1-based letter names; empty = defaults

  int length() const { return static_cast<int>(symbols.size()); }
  int edge_count() const { return length() / 2; }
  Symbol at_cyclic(int i) const {
    int n = length();
    return symbols[((i % n) + n) % n];
  }
};

// Checks even length >= 2, dense indices each appearing exactly twice and, in
// oriented mode, with opposite exponents. Throws WordError on failure.
WicksWord make_word(std::vector<Symbol> symbols, Mode mode,
                    std::vector<std::string> names = {});

// Text format: whitespace-separated tokens, apostrophe suffix = inverse
// ("a b c a' b' c'"). Signed decimal tokens are accepted as an alternative
// ("1 2 3 -1 -2 -3"). Letters are indexed by first appearance.
WicksWord parse_word(std::string_view text, Mode mode);
std::string render_word(const WicksWord& word);
std::string render_symbol(const WicksWord& word, Symbol s);
std::string default_letter_name(int index);  // 1->a, 26->z, 27->aa, ...

struct Violation {
  enum class Kind {
    missing_same_sign,     // (i), nonoriented: no letter repeats an exponent
    cancellation,          // (ii): cyclic factor x x^-1
    inverse_factor_pair,   // (iii): cyclic factors x y and y^-1 x^-1
    repeated_factor_pair,  // (iii), nonoriented: factor x y at two disjoint
                           // places (the word reduces via z = x y)
  };
  Kind kind;
  int condition = 0;              // 1, 2 or 3
  std::array<int, 2> positions{-1, -1};  // factor start positions, 0-based
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
};

ValidationReport validate(const WicksWord& word);

// Relabels letters 1,2,... by first appearance and flips each letter's sign
// so its first occurrence is positive. Two linear words are related by a
// sign-respecting letter bijection iff they normalize to the same sequence.
std::vector<Symbol> normalize_linear(std::span<const Symbol> symbols);

struct CanonicalForm {
  std::vector<Symbol> symbols;
  Mode mode = Mode::oriented;
  // provenance: symbols = relabel(rotate(reverse?(input), rotation)); the
  // rotation applies to the reversed-inverted cycle when reversed is set
  int rotation = 0;
  bool reversed = false;
  std::vector<Symbol> relabeling;  // old index -> signed new index (1-based)

  bool operator==(const CanonicalForm& other) const {
    return mode == other.mode && symbols == other.symbols;
  }
};

// Lexicographic minimum of normalize_linear over all rotations of the word
// (and of the reversed-inverted cycle when quotient_reversal is set; the
// default matches counting up to orientation-preserving maps only).
// Requires a valid word.
CanonicalForm canonicalize(const WicksWord& word, bool quotient_reversal = false);

bool isomorphic(const WicksWord& a, const WicksWord& b);

// rot(w, k)[i] = w[i + k]; helper for symmetry tests and perturbations.
WicksWord rotated(const WicksWord& word, int shift);
// mapping[i] = signed image of letter i; must be a sign-respecting bijection.
WicksWord relabeled(const WicksWord& word, std::span<const Symbol> mapping);
WicksWord word_from_canonical(const CanonicalForm& canon);

}  // namespace wicks
