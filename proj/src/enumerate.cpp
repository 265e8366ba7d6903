#include "wicks/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>

namespace wicks {

namespace {

using Clock = std::chrono::steady_clock;

struct SharedBudget {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exceeded{false};

  explicit SharedBudget(const Budget& b)
      : max_nodes(b.max_nodes),
        deadline(Clock::now() +
                 std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(b.max_seconds))) {}
};

// Backtracking generator for maximal forms of one (mode, genus). Words are
// built in first-appearance normal form, so every letter's first occurrence
// is positive and letters open in increasing order.
class Generator {
 public:
  Generator(Mode mode, int genus, SharedBudget* budget)
      : mode_(mode),
        genus_(genus),
        length_(mode == Mode::oriented ? 6 * (2 * genus - 1) : 6 * (genus - 1)),
        letters_(length_ / 2),
        target_v_(mode == Mode::oriented ? 4 * genus - 2 : 2 * (genus - 1)),
        budget_(budget) {
    word_.assign(length_, 0);
    first_pos_.assign(letters_ + 1, -1);
    second_pos_.assign(letters_ + 1, -1);
    factor_count_.assign(static_cast<size_t>(2 * letters_ + 2) *
                             (2 * letters_ + 2),
                         0);
    dsu_parent_.resize(length_);
    dsu_size_.resize(length_);
    for (int i = 0; i < length_; ++i) dsu_parent_[i] = i, dsu_size_[i] = 1;
    cand_status_.assign(length_, Inactive);
    cand_fresh_.assign(length_, 0);
    cand_map_.assign(static_cast<size_t>(length_) * (letters_ + 1), 0);
    frames_.resize(length_);
  }

  void run() { dfs(0, -1); }

  std::vector<std::vector<Symbol>> collect_prefixes(int depth) {
    prefixes_.clear();
    dfs(0, depth);
    return std::move(prefixes_);
  }

  void run_from(const std::vector<Symbol>& prefix) {
    for (size_t i = 0; i < prefix.size(); ++i) {
      count_node();
      if (!try_place(static_cast<int>(i), prefix[i]))
        throw std::logic_error("enumeration prefix failed to replay");
    }
    dfs(static_cast<int>(prefix.size()), -1);
    for (int i = static_cast<int>(prefix.size()) - 1; i >= 0; --i) unplace(i);
  }

  std::vector<std::vector<Symbol>>& results() { return results_; }

 private:
  enum CandStatus : std::uint8_t { Inactive, Alive, Dead };
  struct CandUndo {
    std::int16_t j;
    std::int16_t letter;  // letter whose map slot was assigned, or 0
    std::uint8_t kind;    // 0 map-assign, 1 status->dead, 2 activation
  };
  struct Frame {
    bool factor_added = false;
    int dsu_merges = 0;
    std::uint32_t cand_mark = 0;
    int opened = 0;  // fresh letter opened here, else 0
    int closed = 0;  // letter closed here, else 0
  };

  Mode mode_;
  int genus_, length_, letters_, target_v_;
  SharedBudget* budget_;

  std::vector<Symbol> word_;
  std::vector<int> first_pos_, second_pos_;
  int used_ = 0;
  std::vector<std::uint8_t> factor_count_;
  std::vector<int> dsu_parent_, dsu_size_;
  std::vector<std::pair<int, int>> dsu_trail_;  // (child root, parent root)
  std::vector<std::uint8_t> cand_status_;
  std::vector<std::int16_t> cand_fresh_;
  std::vector<std::int16_t> cand_map_;  // [j * (letters+1) + letter]
  std::vector<CandUndo> cand_trail_;
  std::vector<Frame> frames_;
  std::uint64_t local_nodes_ = 0;

  std::vector<std::vector<Symbol>> results_;
  std::vector<std::vector<Symbol>> prefixes_;

  int factor_key(Symbol x, Symbol y) const {
    return static_cast<int>(symbol_key(x)) * (2 * letters_ + 2) +
           static_cast<int>(symbol_key(y));
  }

  std::int16_t& cand_map(int j, int letter) {
    return cand_map_[static_cast<size_t>(j) * (letters_ + 1) + letter];
  }

  int find(int x) const {
    while (dsu_parent_[x] != x) x = dsu_parent_[x];
    return x;
  }

  // returns false (without merging) if the orbit would exceed 3 corners
  bool dsu_union(int a, int b, Frame& f) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return true;
    if (dsu_size_[ra] + dsu_size_[rb] > 3) return false;
    if (dsu_size_[ra] < dsu_size_[rb]) std::swap(ra, rb);
    dsu_parent_[rb] = ra;
    dsu_size_[ra] += dsu_size_[rb];
    dsu_trail_.emplace_back(rb, ra);
    ++f.dsu_merges;
    return true;
  }

  void dsu_rollback(int merges) {
    while (merges-- > 0) {
      auto [child, parent] = dsu_trail_.back();
      dsu_trail_.pop_back();
      dsu_parent_[child] = child;
      dsu_size_[parent] -= dsu_size_[child];
    }
  }

  void count_node() {
    if (++local_nodes_ % 4096 == 0) {
      std::uint64_t total =
          budget_->nodes.fetch_add(4096, std::memory_order_relaxed) + 4096;
      if (total > budget_->max_nodes || Clock::now() > budget_->deadline ||
          budget_->exceeded.load(std::memory_order_relaxed)) {
        budget_->exceeded.store(true, std::memory_order_relaxed);
        throw BudgetExceeded(
            total > budget_->max_nodes ? "node budget exceeded"
                                       : "time budget exceeded",
            total, results_.size());
      }
    }
  }

  bool try_place(int k, Symbol y) {
    Frame& f = frames_[k];
    f = Frame{};
    f.cand_mark = static_cast<std::uint32_t>(cand_trail_.size());
    const Symbol prev = k > 0 ? word_[k - 1] : 0;

    // no cancellation against the previous symbol
    if (k > 0 && y == inverse_of(prev)) return false;
    if (k > 0) {
      // factor conditions: the inverted pair anywhere, and (nonoriented)
      // the identical pair anywhere, are both fatal
      if (factor_count_[factor_key(inverse_of(y), inverse_of(prev))] > 0)
        return false;
      if (mode_ == Mode::nonoriented && factor_count_[factor_key(prev, y)] > 0)
        return false;
    }

    word_[k] = y;
    int letter = index_of(y);
    if (first_pos_[letter] < 0) {
      first_pos_[letter] = k;
      ++used_;
      f.opened = letter;
    } else {
      second_pos_[letter] = k;
      f.closed = letter;
    }
    if (k > 0) {
      ++factor_count_[factor_key(prev, y)];
      f.factor_added = true;
    }

    // corner identifications once a letter is closed; orbits may not pass 3
    if (f.closed) {
      int p = first_pos_[letter], q = k;
      bool same = sign_of(y) > 0;  // first occurrence is always positive
      int a1 = p, b1 = same ? q : (q + 1) % length_;
      int a2 = (p + 1) % length_, b2 = same ? (q + 1) % length_ : q;
      if (!dsu_union(a1, b1, f) || !dsu_union(a2, b2, f)) {
        undo_frame(k);
        return false;
      }
    }

    // prefix canonicity: no rotation of any completion may sort below the
    // word itself; rotation j is compared against the prefix as symbols come
    for (int j = 1; j < k; ++j) {
      if (cand_status_[j] != Alive) continue;
      std::int16_t& m = cand_map(j, letter);
      Symbol norm;
      if (m == 0) {
        m = static_cast<std::int16_t>(sign_of(y) * cand_fresh_[j]);
        norm = cand_fresh_[j]++;
        cand_trail_.push_back({static_cast<std::int16_t>(j),
                               static_cast<std::int16_t>(letter), 0});
      } else {
        norm = sign_of(y) == sign_of(m) ? index_of(m) : -index_of(m);
      }
      unsigned nk = symbol_key(norm), rk = symbol_key(word_[k - j]);
      if (nk < rk) {
        undo_frame(k);
        return false;
      }
      if (nk > rk) {
        cand_status_[j] = Dead;
        cand_trail_.push_back({static_cast<std::int16_t>(j), 0, 1});
      }
    }
    if (k >= 1) {
      // rotation starting at k becomes comparable; both words open with +1
      cand_status_[k] = Alive;
      cand_map(k, letter) = static_cast<std::int16_t>(sign_of(y));
      cand_fresh_[k] = 2;
      cand_trail_.push_back({static_cast<std::int16_t>(k),
                             static_cast<std::int16_t>(letter), 2});
    }
    return true;
  }

  void undo_frame(int k) {
    Frame& f = frames_[k];
    while (cand_trail_.size() > f.cand_mark) {
      const CandUndo& u = cand_trail_.back();
      switch (u.kind) {
        case 0:
          cand_map(u.j, u.letter) = 0;
          --cand_fresh_[u.j];
          break;
        case 1:
          cand_status_[u.j] = Alive;
          break;
        case 2:
          cand_status_[u.j] = Inactive;
          cand_map(u.j, u.letter) = 0;
          break;
      }
      cand_trail_.pop_back();
    }
    dsu_rollback(f.dsu_merges);
    f.dsu_merges = 0;
    if (f.factor_added) {
      --factor_count_[factor_key(word_[k - 1], word_[k])];
      f.factor_added = false;
    }
    if (f.opened) {
      first_pos_[f.opened] = -1;
      --used_;
    }
    if (f.closed) second_pos_[f.closed] = -1;
    f.opened = f.closed = 0;
    word_[k] = 0;
  }

  void unplace(int k) { undo_frame(k); }

  void dfs(int k, int collect_depth) {
    if (k == collect_depth) {
      prefixes_.emplace_back(word_.begin(), word_.begin() + k);
      return;
    }
    if (k == length_) {
      emit();
      return;
    }
    for (int l = 1; l <= used_; ++l) {
      if (second_pos_[l] >= 0) continue;
      if (mode_ == Mode::nonoriented) attempt(k, +l, collect_depth);
      attempt(k, -l, collect_depth);
    }
    if (used_ < letters_) attempt(k, used_ + 1, collect_depth);
  }

  void attempt(int k, Symbol y, int collect_depth) {
    count_node();
    if (try_place(k, y)) {
      dfs(k + 1, collect_depth);
      unplace(k);
    }
  }

  // full cyclic canonicity: finish the comparison of every still-equal
  // rotation over the wrapped-around part of the word
  bool cyclically_canonical() {
    for (int j = 1; j < length_; ++j) {
      if (cand_status_[j] != Alive) continue;
      std::vector<std::int16_t> m(cand_map_.begin() +
                                      static_cast<size_t>(j) * (letters_ + 1),
                                  cand_map_.begin() +
                                      static_cast<size_t>(j + 1) * (letters_ + 1));
      int fresh = cand_fresh_[j];
      bool decided = false;
      for (int t = 0; t < j && !decided; ++t) {
        Symbol y = word_[t];
        std::int16_t& slot = m[index_of(y)];
        Symbol norm;
        if (slot == 0) {
          slot = static_cast<std::int16_t>(sign_of(y) * fresh);
          norm = fresh++;
        } else {
          norm = sign_of(y) == sign_of(slot) ? index_of(slot) : -index_of(slot);
        }
        unsigned nk = symbol_key(norm), rk = symbol_key(word_[length_ - j + t]);
        if (nk < rk) return false;
        if (nk > rk) decided = true;
      }
    }
    return true;
  }

  void emit() {
    if (!cyclically_canonical()) return;
    WicksWord word = make_word(word_, mode_);
    if (!validate(word).ok) return;  // wrap factors, nonoriented condition (i)
    GluedGraph graph = glue(word);
    if (graph.vertex_count != target_v_) return;
    if (graph.genus != genus_)
      throw std::logic_error("trivalent gluing produced the wrong genus");
    results_.push_back(word_);
  }
};

CensusEntry build_entry(const std::vector<Symbol>& symbols, Mode mode) {
  CensusEntry entry;
  entry.word = make_word(symbols, mode);
  if (canonicalize(entry.word).symbols != symbols)
    throw std::logic_error("enumeration emitted a non-canonical word");
  GluedGraph graph = glue(entry.word);
  entry.vertex_count = graph.vertex_count;
  entry.edge_count = graph.edge_count;
  entry.euler_characteristic = graph.euler_characteristic;
  entry.genus = graph.genus;
  entry.degrees = graph.degrees();
  entry.aut = aut_group(entry.word);
  if (mode == Mode::oriented) entry.labels = classify(entry.word);
  return entry;
}

}  // namespace

std::vector<CensusEntry> enumerate_maximal(const EnumOptions& options) {
  const int g = options.genus;
  if (options.mode == Mode::oriented) {
    if (g < 1) throw std::invalid_argument("oriented enumeration needs genus >= 1");
  } else if (g < 2) {
    throw std::invalid_argument(
        "nonoriented maximal forms need genus >= 2 (length 6(g-1) >= 6)");
  }
  SharedBudget budget(options.budget);
  std::vector<std::vector<Symbol>> words;

  if (options.threads <= 1) {
    Generator gen(options.mode, g, &budget);
    gen.run();
    words = std::move(gen.results());
  } else {
    const int length = options.mode == Mode::oriented ? 6 * (2 * g - 1)
                                                      : 6 * (g - 1);
    const int split_depth = std::min(7, length / 2);
    Generator splitter(options.mode, g, &budget);
    std::vector<std::vector<Symbol>> prefixes =
        splitter.collect_prefixes(split_depth);
    const int tasks = std::min<int>(options.threads,
                                    std::max<size_t>(prefixes.size(), 1));
    std::vector<std::future<std::vector<std::vector<Symbol>>>> futures;
    futures.reserve(tasks);
    for (int t = 0; t < tasks; ++t) {
      futures.push_back(std::async(std::launch::async, [&, t]() {
        Generator gen(options.mode, g, &budget);
        for (size_t i = t; i < prefixes.size(); i += tasks)
          gen.run_from(prefixes[i]);
        return std::move(gen.results());
      }));
    }
    for (auto& fut : futures) {
      auto part = fut.get();
      words.insert(words.end(), part.begin(), part.end());
    }
  }

  std::sort(words.begin(), words.end(),
            [](const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
              return symbol_seq_less(a, b);
            });
  for (size_t i = 1; i < words.size(); ++i)
    if (words[i] == words[i - 1])
      throw std::logic_error("duplicate canonical word in enumeration output");

  std::vector<CensusEntry> entries;
  entries.reserve(words.size());
  for (const auto& w : words) entries.push_back(build_entry(w, options.mode));
  return entries;
}

std::vector<CensusEntry> enumerate_oriented_maximal(int genus, Budget budget,
                                                    int threads) {
  return enumerate_maximal({genus, Mode::oriented, budget, threads});
}

std::vector<CensusEntry> enumerate_nonoriented_maximal(int genus, Budget budget,
                                                       int threads) {
  return enumerate_maximal({genus, Mode::nonoriented, budget, threads});
}

MassReport verify_masses(int genus, const std::vector<CensusEntry>& entries) {
  MassReport report;
  report.genus = genus;
  auto push = [&](std::string family, Rational census, Rational formula) {
    bool pass = census == formula;
    report.checks.push_back(
        {std::move(family), std::move(census), std::move(formula), pass});
  };

  Rational total(0);
  std::map<int, Rational> by_r;
  std::map<std::pair<int, int>, Rational> by_st;
  std::map<std::array<int, 3>, Rational> by_label;
  for (const CensusEntry& e : entries) {
    if (e.word.mode != Mode::oriented)
      throw std::invalid_argument("mass verification applies to oriented censuses");
    Rational w(1, e.aut.order);
    total += w;
    if (e.aut.order % 2 == 0) by_r[*e.aut.fixed_edges_r] += w;
    if (e.aut.order % 3 == 0)
      by_st[{*e.aut.fixed_vertices_s, *e.aut.fixed_vertices_t}] += w;
    if (e.aut.order == 6)
      by_label[{*e.aut.fixed_edges_r, *e.aut.fixed_vertices_s,
                *e.aut.fixed_vertices_t}] += w;
  }

  push("m1", total, mass_total(genus));

  std::map<int, Rational> r_checks;
  for (int f = 0; 2 * genus + 1 - 4 * f >= 0; ++f)
    r_checks[2 * genus + 1 - 4 * f] = Rational(0);
  for (const auto& [r, mass] : by_r) r_checks[r] = mass;
  for (const auto& [r, mass] : r_checks)
    push("m2(" + std::to_string(r) + ")", mass, mass_order2(genus, r));

  std::map<std::pair<int, int>, Rational> st_checks;
  for (int f = 0; genus + 1 - 3 * f >= 0; ++f) {
    int sum = genus + 1 - 3 * f;
    for (int s = (2 * genus + 1) % 3; s <= sum; s += 3)
      st_checks[{s, sum - s}] = Rational(0);
  }
  for (const auto& [st, mass] : by_st) st_checks[st] = mass;
  for (const auto& [st, mass] : st_checks)
    push("m3(" + std::to_string(st.first) + "," + std::to_string(st.second) + ")",
         mass, mass_order3(genus, st.first, st.second));

  std::map<std::array<int, 3>, Rational> label_checks;
  for (int f = 0; 2 * genus + 5 - 12 * f >= 0; ++f) {
    int rem = 2 * genus + 5 - 12 * f;
    for (int s = (2 * (2 * genus + 1)) % 3; 4 * s <= rem; s += 3)
      for (int t = (2 * (2 * genus)) % 3; 4 * s + 4 * t <= rem; t += 3) {
        int three_r = rem - 4 * s - 4 * t;
        if (three_r % 3 != 0) continue;
        label_checks[order6_label(three_r / 3, s, t)] = Rational(0);
      }
  }
  for (const auto& [label, mass] : by_label) label_checks[label] = mass;
  Rational m6_census(0);
  for (const auto& [label, mass] : label_checks) {
    auto args = order6_args(label[0], label[1], label[2]);
    Rational formula = args ? mass_order6(genus, (*args)[0], (*args)[1], (*args)[2])
                            : Rational(0);
    push("m6(" + std::to_string(label[0]) + ";" + std::to_string(label[1]) +
             "," + std::to_string(label[2]) + ")",
         mass, formula);
    m6_census += mass;
  }
  push("m6 total", m6_census, masses(genus).m6);

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const MassCheck& c) { return c.pass; });
  return report;
}

}  // namespace wicks
