#include "wicks/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wicks {

std::string_view mode_name(Mode mode) {
  return mode == Mode::oriented ? "oriented" : "nonoriented";
}

Mode mode_from_name(std::string_view name) {
  if (name == "oriented") return Mode::oriented;
  if (name == "nonoriented") return Mode::nonoriented;
  throw WordError("unknown mode '" + std::string(name) + "'");
}

bool symbol_seq_less(std::span<const Symbol> a, std::span<const Symbol> b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (symbol_key(a[i]) != symbol_key(b[i]))
      return symbol_key(a[i]) < symbol_key(b[i]);
  }
  return a.size() < b.size();
}

std::string default_letter_name(int index) {
  // bijective base 26: 1->a ... 26->z, 27->aa
  std::string out;
  while (index > 0) {
    --index;
    out.push_back(static_cast<char>('a' + index % 26));
    index /= 26;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

WicksWord make_word(std::vector<Symbol> symbols, Mode mode,
                    std::vector<std::string> names) {
  if (symbols.empty()) throw WordError("empty word");
  if (symbols.size() % 2 != 0)
    throw WordError("odd length " + std::to_string(symbols.size()));
  int max_index = 0;
  for (Symbol s : symbols) {
    if (s == 0) throw WordError("zero symbol");
    max_index = std::max(max_index, index_of(s));
  }
  std::vector<int> count(max_index + 1, 0);
  std::vector<int> sign_product(max_index + 1, 1);
  for (Symbol s : symbols) {
    ++count[index_of(s)];
    sign_product[index_of(s)] *= sign_of(s);
  }
  for (int i = 1; i <= max_index; ++i) {
    if (count[i] != 2)
      throw WordError("letter " + std::to_string(i) + " appears " +
                      std::to_string(count[i]) + " times (want 2)");
    if (mode == Mode::oriented && sign_product[i] > 0)
      throw WordError("letter " + std::to_string(i) +
                      " appears twice with the same exponent in oriented mode");
  }
  WicksWord word;
  word.symbols = std::move(symbols);
  word.mode = mode;
  word.alphabet_size = max_index;
  word.names = std::move(names);
  return word;
}

static bool is_integer_token(std::string_view t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

WicksWord parse_word(std::string_view text, Mode mode) {
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  }
  if (tokens.empty()) throw WordError("empty input");

  std::map<std::string, int> index_by_name;
  std::vector<std::string> names(1);  // 1-based
  std::vector<Symbol> symbols;
  for (const std::string& tok : tokens) {
    std::string base = tok;
    int sign = +1;
    if (base.size() > 1 && base.back() == '\'') {
      sign = -1;
      base.pop_back();
    }
    if (is_integer_token(base)) {
      if (base[0] == '-') {
        if (sign < 0)
          throw WordError("token '" + tok + "' combines '-' and apostrophe");
        sign = -1;
        base.erase(base.begin());
      } else if (base[0] == '+') {
        base.erase(base.begin());
      }
      if (base.empty() || base == "0")
        throw WordError("token '" + tok + "' is not a valid letter");
    } else {
      if (base.empty() || base.find('\'') != std::string::npos)
        throw WordError("token '" + tok + "' is not a valid letter");
    }
    auto it = index_by_name.find(base);
    int idx;
    if (it == index_by_name.end()) {
      idx = static_cast<int>(names.size());
      index_by_name.emplace(base, idx);
      names.push_back(base);
    } else {
      idx = it->second;
    }
    symbols.push_back(sign * idx);
  }
  return make_word(std::move(symbols), mode, std::move(names));
}

std::string render_symbol(const WicksWord& word, Symbol s) {
  int idx = index_of(s);
  std::string name = (idx < static_cast<int>(word.names.size()) &&
                      !word.names[idx].empty())
                         ? word.names[idx]
                         : default_letter_name(idx);
  if (s < 0) name.push_back('\'');
  return name;
}

std::string render_word(const WicksWord& word) {
  std::string out;
  for (size_t i = 0; i < word.symbols.size(); ++i) {
    if (i) out.push_back(' ');
    out += render_symbol(word, word.symbols[i]);
  }
  return out;
}

ValidationReport validate(const WicksWord& word) {
  const auto& w = word.symbols;
  const int n = word.length();
  ValidationReport report;

  if (word.mode == Mode::nonoriented) {
    bool same_sign = false;
    std::vector<int> first(word.alphabet_size + 1, 0);
    for (Symbol s : w) {
      int i = index_of(s);
      if (first[i] == 0)
        first[i] = sign_of(s);
      else if (first[i] == sign_of(s))
        same_sign = true;
    }
    if (!same_sign) {
      report.violations.push_back(
          {Violation::Kind::missing_same_sign, 1, {-1, -1},
           "no letter appears twice with the same exponent"});
    }
  }

  auto factor = [&](int p) {
    return std::pair<Symbol, Symbol>(w[p], w[(p + 1) % n]);
  };
  for (int p = 0; p < n; ++p) {
    auto [x, y] = factor(p);
    if (y == inverse_of(x)) {
      report.violations.push_back(
          {Violation::Kind::cancellation, 2, {p, (p + 1) % n},
           "cancelling factor " + render_symbol(word, x) + " " +
               render_symbol(word, y)});
    }
  }
  for (int p = 0; p < n; ++p) {
    auto [x, y] = factor(p);
    for (int q = p + 1; q < n; ++q) {
      auto [u, v] = factor(q);
      if (u == inverse_of(y) && v == inverse_of(x)) {
        report.violations.push_back(
            {Violation::Kind::inverse_factor_pair, 3, {p, q},
             "factor " + render_symbol(word, x) + " " + render_symbol(word, y) +
                 " recurs inverted at position " + std::to_string(q)});
      }
      if (word.mode == Mode::nonoriented && u == x && v == y) {
        // disjointness exempts the wrapped self-overlap of a length-2 word
        int p2 = (p + 1) % n, q2 = (q + 1) % n;
        bool overlap = p == q || p == q2 || p2 == q || p2 == q2;
        if (!overlap) {
          report.violations.push_back(
              {Violation::Kind::repeated_factor_pair, 3, {p, q},
               "factor " + render_symbol(word, x) + " " +
                   render_symbol(word, y) + " repeats at position " +
                   std::to_string(q) + " (word reduces)"});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::vector<Symbol> normalize_linear(std::span<const Symbol> symbols) {
  int max_index = 0;
  for (Symbol s : symbols) max_index = std::max(max_index, index_of(s));
  std::vector<Symbol> map(max_index + 1, 0);
  std::vector<Symbol> out;
  out.reserve(symbols.size());
  int next = 1;
  for (Symbol s : symbols) {
    Symbol& m = map[index_of(s)];
    if (m == 0) m = sign_of(s) * next++;
    out.push_back(sign_of(s) == sign_of(m) ? index_of(m) : -index_of(m));
  }
  return out;
}

static std::vector<Symbol> reversed_cycle(const std::vector<Symbol>& w) {
  std::vector<Symbol> out(w.rbegin(), w.rend());
  for (Symbol& s : out) s = inverse_of(s);
  return out;
}

CanonicalForm canonicalize(const WicksWord& word, bool quotient_reversal) {
  if (!validate(word).ok)
    throw std::invalid_argument("canonicalize: word is not a valid Wicks form");
  const int n = word.length();
  CanonicalForm best;
  bool have = false;
  auto consider = [&](const std::vector<Symbol>& cycle, int rot, bool rev) {
    std::vector<Symbol> rotated(cycle.begin() + rot, cycle.end());
    rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + rot);
    std::vector<Symbol> norm = normalize_linear(rotated);
    if (!have || symbol_seq_less(norm, best.symbols)) {
      have = true;
      best.symbols = std::move(norm);
      best.mode = word.mode;
      best.rotation = rot;
      best.reversed = rev;
      // recover the relabeling that produced this candidate
      best.relabeling.assign(word.alphabet_size + 1, 0);
      int next = 1;
      for (Symbol s : rotated) {
        Symbol& m = best.relabeling[index_of(s)];
        if (m == 0) m = sign_of(s) * next++;
      }
    }
  };
  for (int rot = 0; rot < n; ++rot) consider(word.symbols, rot, false);
  if (quotient_reversal) {
    std::vector<Symbol> rev = reversed_cycle(word.symbols);
    for (int rot = 0; rot < n; ++rot) consider(rev, rot, true);
  }
  return best;
}

bool isomorphic(const WicksWord& a, const WicksWord& b) {
  if (a.mode != b.mode || a.length() != b.length()) return false;
  return canonicalize(a).symbols == canonicalize(b).symbols;
}

WicksWord rotated(const WicksWord& word, int shift) {
  const int n = word.length();
  shift = ((shift % n) + n) % n;
  std::vector<Symbol> out(word.symbols.begin() + shift, word.symbols.end());
  out.insert(out.end(), word.symbols.begin(), word.symbols.begin() + shift);
  return make_word(std::move(out), word.mode, word.names);
}

WicksWord relabeled(const WicksWord& word, std::span<const Symbol> mapping) {
  if (static_cast<int>(mapping.size()) < word.alphabet_size + 1)
    throw std::invalid_argument("relabeled: mapping too short");
  std::vector<bool> hit(word.alphabet_size + 1, false);
  for (int i = 1; i <= word.alphabet_size; ++i) {
    int img = index_of(mapping[i]);
    if (mapping[i] == 0 || img > word.alphabet_size || hit[img])
      throw std::invalid_argument("relabeled: mapping is not a bijection");
    hit[img] = true;
  }
  std::vector<Symbol> out;
  out.reserve(word.symbols.size());
  for (Symbol s : word.symbols) {
    Symbol m = mapping[index_of(s)];
    out.push_back(sign_of(s) > 0 ? m : inverse_of(m));
  }
  return make_word(std::move(out), word.mode);
}

WicksWord word_from_canonical(const CanonicalForm& canon) {
  return make_word(canon.symbols, canon.mode);
}

}  // namespace wicks
