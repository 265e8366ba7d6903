#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <set>

#include "random_words.hpp"
#include "wicks/automorphisms.hpp"
#include "wicks/word.hpp"

using namespace wicks;

TEST_CASE("parse apostrophe notation") {
  WicksWord w = parse_word("a b c a' b' c'", Mode::oriented);
  CHECK(w.symbols == std::vector<Symbol>{1, 2, 3, -1, -2, -3});
  CHECK(w.alphabet_size == 3);
  CHECK(w.mode == Mode::oriented);
}

TEST_CASE("parse integer notation") {
  WicksWord w = parse_word("1 2 3 -1 -2 -3", Mode::oriented);
  CHECK(w.symbols == std::vector<Symbol>{1, 2, 3, -1, -2, -3});
  // indices follow first appearance, not the token values
  WicksWord v = parse_word("7 3 7 3", Mode::nonoriented);
  CHECK(v.symbols == std::vector<Symbol>{1, 2, 1, 2});
}

TEST_CASE("parse a a") {
  WicksWord w = parse_word("a a", Mode::nonoriented);
  CHECK(w.symbols == std::vector<Symbol>{1, 1});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_word("a b a", Mode::nonoriented), WordError);
  CHECK_THROWS_AS(parse_word("", Mode::oriented), WordError);
  CHECK_THROWS_AS(parse_word("a b c a' b'", Mode::oriented), WordError);
  // same exponent twice is structural only in oriented mode
  CHECK_THROWS_AS(parse_word("a a b b'", Mode::oriented), WordError);
  CHECK_NOTHROW(parse_word("a a b b'", Mode::nonoriented));
}

TEST_CASE("render round-trips token streams") {
  for (const char* text : {"a b c a' b' c'", "x y x' y'", "a a",
                           "foo bar foo' bar'"}) {
    WicksWord w = parse_word(text, Mode::nonoriented);
    CHECK(render_word(w) == text);
  }
}

TEST_CASE("default letter names") {
  CHECK(default_letter_name(1) == "a");
  CHECK(default_letter_name(26) == "z");
  CHECK(default_letter_name(27) == "aa");
  CHECK(default_letter_name(28) == "ab");
}

TEST_CASE("validate reports cancellations") {
  WicksWord w = make_word({1, -1, 2, -2}, Mode::oriented);
  ValidationReport rep = validate(w);
  CHECK_FALSE(rep.ok);
  int cancellations = 0;
  for (const Violation& v : rep.violations)
    if (v.kind == Violation::Kind::cancellation) {
      ++cancellations;
      bool first = v.positions == std::array<int, 2>{0, 1};
      bool second = v.positions == std::array<int, 2>{2, 3};
      CHECK((first || second));
    }
  CHECK(cancellations == 2);
}

TEST_CASE("validate accepts the genus-1 hexagon") {
  CHECK(validate(make_word({1, 2, 3, -1, -2, -3}, Mode::oriented)).ok);
}

TEST_CASE("validate flags an inverted factor pair") {
  // factors (a b) at 0 and (b' a') at 3
  WicksWord w = make_word({1, 2, 3, -2, -1, -3}, Mode::oriented);
  ValidationReport rep = validate(w);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == Violation::Kind::inverse_factor_pair);
  CHECK(rep.violations[0].condition == 3);
  CHECK(rep.violations[0].positions == std::array<int, 2>{0, 3});
}

TEST_CASE("validate flags nonoriented reducible repetitions") {
  // a b a b reduces via z = ab; both vertices of its gluing have degree 2
  WicksWord w = make_word({1, 2, 1, 2}, Mode::nonoriented);
  ValidationReport rep = validate(w);
  CHECK_FALSE(rep.ok);
  bool repeated = false;
  for (const Violation& v : rep.violations)
    repeated |= v.kind == Violation::Kind::repeated_factor_pair;
  CHECK(repeated);
  // but the length-2 projective-plane word stays valid (occurrences overlap)
  CHECK(validate(make_word({1, 1}, Mode::nonoriented)).ok);
}

TEST_CASE("validate requires a same-exponent pair in nonoriented mode") {
  WicksWord w = make_word({1, 2, -1, -2}, Mode::nonoriented);
  ValidationReport rep = validate(w);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == Violation::Kind::missing_same_sign);
  CHECK(rep.violations[0].condition == 1);
}

TEST_CASE("oriented length-2 words fail validation") {
  ValidationReport rep = validate(make_word({1, -1}, Mode::oriented));
  CHECK_FALSE(rep.ok);
}

TEST_CASE("canonicalize is rotation and relabeling invariant") {
  WicksWord w = make_word({1, 2, 3, -1, -2, -3}, Mode::oriented);
  CanonicalForm base = canonicalize(w);
  CHECK(base.symbols == std::vector<Symbol>{1, 2, 3, -1, -2, -3});
  CHECK(canonicalize(rotated(w, 2)) == base);
  // swap a and b
  std::vector<Symbol> swap_ab{0, 2, 1, 3};
  CHECK(canonicalize(relabeled(w, swap_ab)) == base);
}

TEST_CASE("canonicalize properties on random words") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    int letters = 2 + static_cast<int>(rng() % 6);
    Mode mode = rng() % 2 ? Mode::oriented : Mode::nonoriented;
    WicksWord w = testing::random_valid_word(rng, letters, mode);
    CanonicalForm canon = canonicalize(w);

    // idempotence
    CHECK(canonicalize(word_from_canonical(canon)).symbols == canon.symbols);

    // invariance under a random rotation plus relabeling
    WicksWord moved = relabeled(rotated(w, static_cast<int>(rng() % w.length())),
                                testing::random_relabeling(rng, letters));
    CHECK(canonicalize(moved).symbols == canon.symbols);
    CHECK(isomorphic(w, moved));

    // the recorded provenance reproduces the canonical symbols
    WicksWord replay = relabeled(rotated(w, canon.rotation), canon.relabeling);
    CHECK(replay.symbols == canon.symbols);
  }
}

TEST_CASE("reversal quotient flag") {
  // reading backwards is a separate quotient, off by default
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    WicksWord w = testing::random_valid_word(rng, 4, Mode::nonoriented);
    std::vector<Symbol> rev(w.symbols.rbegin(), w.symbols.rend());
    for (Symbol& s : rev) s = -s;
    WicksWord back = make_word(rev, Mode::nonoriented);
    CHECK(canonicalize(w, true).symbols == canonicalize(back, true).symbols);
  }
}

TEST_CASE("orbit-stabilizer: distinct normalized rotations times |Aut| = 2e") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 400; ++i) {
    int letters = 2 + static_cast<int>(rng() % 6);
    Mode mode = rng() % 2 ? Mode::oriented : Mode::nonoriented;
    WicksWord w = testing::random_valid_word(rng, letters, mode);
    std::set<std::vector<Symbol>> rotations;
    for (int j = 0; j < w.length(); ++j)
      rotations.insert(normalize_linear(rotated(w, j).symbols));
    size_t aut = static_cast<size_t>(aut_group(w).order);
    CHECK(rotations.size() * aut == static_cast<size_t>(w.length()));
  }
}

TEST_CASE("normalize_linear flips first occurrences positive") {
  std::vector<Symbol> in{-3, 1, 3, -1};
  CHECK(normalize_linear(in) == std::vector<Symbol>{1, 2, -1, -2});
}

TEST_CASE("canonicalize rejects invalid words") {
  CHECK_THROWS_AS(canonicalize(make_word({1, -1}, Mode::oriented)),
                  std::invalid_argument);
}
