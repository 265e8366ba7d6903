// wicks - command line front end for the Wicks-form toolkit.
//
// Subcommands: validate, analyze, canon, table, masses, enumerate, radii.
// Exit codes: 0 success, 1 domain-invalid input, 2 usage error,
//             3 budget exceeded, 4 internal fault.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wicks/automorphisms.hpp"
#include "wicks/census.hpp"
#include "wicks/enumerate.hpp"
#include "wicks/gluing.hpp"
#include "wicks/json_io.hpp"
#include "wicks/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordInput {
  std::vector<std::string> tokens;  // remaining positional arguments
  std::string file;
  bool use_stdin = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("word", tokens, "word tokens, e.g.  a b c a' b' c'");
    cmd->add_option("--file", file, "read the word from a file");
    cmd->add_flag("--stdin", use_stdin, "read the word from standard input");
  }

  std::string text() const {
    std::string out;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot open '" + file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      out = ss.str();
    } else if (use_stdin) {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      out = ss.str();
    } else {
      for (const std::string& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t;
      }
    }
    if (out.find_first_not_of(" \t\r\n") == std::string::npos)
      throw UsageError("no word given");
    return out;
  }
};

struct GenusRange {
  int lo = 0, hi = 0;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  return out;
}

// ---- validate ----------------------------------------------------------

int cmd_validate(const WordInput& input, wicks::Mode mode,
                 const std::string& format) {
  wicks::WicksWord word = wicks::parse_word(input.text(), mode);
  wicks::ValidationReport report = wicks::validate(word);
  if (format == "json") {
    std::cout << wicks::report_to_json(word, report).dump(2) << "\n";
  } else {
    if (report.ok) {
      std::cout << "ok: " << wicks::render_word(word) << " is a valid "
                << wicks::mode_name(mode) << " Wicks form\n";
    } else {
      std::cout << "invalid: " << wicks::render_word(word) << "\n";
      for (const wicks::Violation& v : report.violations) {
        std::cout << "  condition (" << (v.condition == 1 ? "i" : v.condition == 2 ? "ii" : "iii")
                  << ") " << v.detail;
        if (v.positions[0] >= 0)
          std::cout << " [positions " << v.positions[0] << "," << v.positions[1]
                    << "]";
        std::cout << "\n";
      }
    }
  }
  return report.ok ? kExitOk : kExitInvalid;
}

// ---- analyze -----------------------------------------------------------

int cmd_analyze(const WordInput& input, wicks::Mode mode,
                const std::string& format) {
  wicks::WicksWord word = wicks::parse_word(input.text(), mode);
  wicks::ValidationReport report = wicks::validate(word);
  if (!report.ok) {
    if (format == "json")
      std::cout << wicks::report_to_json(word, report).dump(2) << "\n";
    else
      std::cout << "invalid word; run 'wicks validate' for details\n";
    return kExitInvalid;
  }
  wicks::GluedGraph graph = wicks::glue(word);
  wicks::AutDescriptor aut = wicks::aut_group(word);
  bool maximal = wicks::is_maximal(word, graph);
  wicks::CanonicalForm canon = wicks::canonicalize(word);
  std::optional<wicks::ClassLabels> labels;
  if (mode == wicks::Mode::oriented && maximal) labels = wicks::classify(word);

  if (format == "json") {
    wicks::Json j{{"word", wicks::render_word(word)},
                  {"mode", wicks::mode_name(mode)},
                  {"length", word.length()},
                  {"letters", word.alphabet_size},
                  {"graph", wicks::glued_graph_to_json(graph)},
                  {"aut", wicks::aut_to_json(aut)},
                  {"maximal", maximal},
                  {"canonical", wicks::render_word(wicks::word_from_canonical(canon))}};
    if (labels) j["classes"] = wicks::labels_to_json(*labels);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "word:      " << wicks::render_word(word) << "\n";
    std::cout << "mode:      " << wicks::mode_name(mode) << "\n";
    std::cout << "length:    " << word.length() << "  (letters: " << word.alphabet_size
              << ")\n";
    std::cout << "genus:     " << graph.genus << "\n";
    std::cout << "v, e, chi: " << graph.vertex_count << ", " << graph.edge_count
              << ", " << graph.euler_characteristic << "\n";
    std::cout << "degrees:  ";
    for (int d : graph.degrees()) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "|Aut|:     " << aut.order
              << "  (generator shift " << aut.generator_shift << ")\n";
    if (aut.fixed_edges_r)
      std::cout << "r:         " << *aut.fixed_edges_r
                << "  (edges reversed by the order-2 element)\n";
    if (aut.fixed_vertices_s)
      std::cout << "(s, t):    (" << *aut.fixed_vertices_s << ", "
                << *aut.fixed_vertices_t << ")  (vertices fixed by the order-3 element)\n";
    std::cout << "maximal:   " << (maximal ? "yes" : "no") << "\n";
    if (labels) {
      std::cout << "classes:   base";
      if (labels->order2_r) std::cout << "; order-2 (r=" << *labels->order2_r << ")";
      if (labels->order3_st)
        std::cout << "; order-3 (s=" << labels->order3_st->first
                  << ", t=" << labels->order3_st->second << ")";
      if (labels->order6_label)
        std::cout << "; order-6 (" << (*labels->order6_label)[0] << ";"
                  << (*labels->order6_label)[1] << ","
                  << (*labels->order6_label)[2] << ")";
      std::cout << "\n";
    }
    std::cout << "canonical: " << wicks::render_word(wicks::word_from_canonical(canon))
              << "\n";
  }
  return kExitOk;
}

// ---- canon -------------------------------------------------------------

int cmd_canon(const WordInput& input, wicks::Mode mode, bool with_reversal,
              const std::string& format) {
  wicks::WicksWord word = wicks::parse_word(input.text(), mode);
  wicks::ValidationReport report = wicks::validate(word);
  if (!report.ok) {
    std::cout << "invalid word; run 'wicks validate' for details\n";
    return kExitInvalid;
  }
  wicks::CanonicalForm canon = wicks::canonicalize(word, with_reversal);
  if (format == "json") {
    wicks::Json j{{"canonical", wicks::render_word(wicks::word_from_canonical(canon))},
                  {"symbols", canon.symbols},
                  {"rotation", canon.rotation},
                  {"reversed", canon.reversed},
                  {"relabeling", canon.relabeling}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << wicks::render_word(wicks::word_from_canonical(canon)) << "\n";
  }
  return kExitOk;
}

// ---- table / masses ----------------------------------------------------

int cmd_table(GenusRange range, const std::string& format,
              const std::string& output) {
  if (range.lo < 1 || range.hi < range.lo)
    throw UsageError("empty or unsupported genus range");
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file = open_output(output);
    out = &file;
  }
  std::vector<wicks::CensusRow> rows;
  for (int g = range.lo; g <= range.hi; ++g) rows.push_back(wicks::counts(g));
  if (format == "csv") {
    *out << wicks::census_row_csv_header() << "\n";
    for (const auto& row : rows) *out << wicks::census_row_csv(row) << "\n";
  } else if (format == "json") {
    wicks::Json arr = wicks::Json::array();
    for (const auto& row : rows) arr.push_back(wicks::census_row_to_json(row));
    *out << arr.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      *out << "genus " << row.genus << ": M1 = " << row.M1.str();
      if (row.genus == 1)
        *out << "  (masses only; surface counting needs genus >= 2)";
      else if (row.bijection_status == wicks::BijectionStatus::open)
        *out << "  (form count; surface bijection open)";
      *out << "\n";
      *out << "  masses m1=" << wicks::rational_str(row.mass.m1)
           << " m2=" << wicks::rational_str(row.mass.m2)
           << " m3=" << wicks::rational_str(row.mass.m3)
           << " m6=" << wicks::rational_str(row.mass.m6) << "\n";
      *out << "  M = (" << row.M1.str() << ", " << row.M2.str() << ", "
           << row.M3.str() << ", " << row.M6.str() << ")"
           << "  exact-order n = (" << row.n1.str() << ", " << row.n2.str()
           << ", " << row.n3.str() << ", " << row.n6.str() << ")\n";
    }
  }
  return kExitOk;
}

int cmd_masses(int genus, const std::string& format) {
  if (genus < 1) throw UsageError("genus must be >= 1");
  wicks::Masses m = wicks::masses(genus);
  if (format == "json") {
    wicks::Json j{{"genus", genus},
                  {"m1", wicks::rational_str(m.m1)},
                  {"m2", wicks::rational_str(m.m2)},
                  {"m3", wicks::rational_str(m.m3)},
                  {"m6", wicks::rational_str(m.m6)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m1 = " << wicks::rational_str(m.m1) << "\n"
              << "m2 = " << wicks::rational_str(m.m2) << "\n"
              << "m3 = " << wicks::rational_str(m.m3) << "\n"
              << "m6 = " << wicks::rational_str(m.m6) << "\n";
  }
  return kExitOk;
}

// ---- radii -------------------------------------------------------------

int cmd_radii(GenusRange range, int precision, const std::string& format) {
  if (range.lo < 2 || range.hi < range.lo)
    throw UsageError("radii need a genus range with low >= 2");
  char buf[64];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return std::string(buf);
  };
  if (format == "csv") std::cout << "genus,beta,R,C\n";
  wicks::Json arr = wicks::Json::array();
  for (int g = range.lo; g <= range.hi; ++g) {
    wicks::DiskRadii r = wicks::disk_radii(g);
    if (format == "json") {
      arr.push_back(wicks::Json{{"genus", g},
                                {"beta", fmt(r.beta)},
                                {"R", fmt(r.R)},
                                {"C", fmt(r.C)}});
    } else if (format == "csv") {
      std::cout << g << "," << fmt(r.beta) << "," << fmt(r.R) << "," << fmt(r.C)
                << "\n";
    } else {
      std::cout << "genus " << g << ": beta = " << fmt(r.beta)
                << "  R = " << fmt(r.R) << "  C = " << fmt(r.C) << "\n";
    }
  }
  if (format == "json") std::cout << arr.dump(2) << "\n";
  return kExitOk;
}

// ---- enumerate ---------------------------------------------------------

int cmd_enumerate(int genus, wicks::Mode mode, bool expensive,
                  wicks::Budget budget, int threads, const std::string& output,
                  const std::string& summary_path) {
  if (genus < 1) throw UsageError("genus must be >= 1");
  bool cheap = mode == wicks::Mode::oriented ? genus <= 2
                                             : (genus >= 2 && genus <= 3);
  if (mode == wicks::Mode::nonoriented && genus < 2)
    throw UsageError("nonoriented maximal forms start at genus 2");
  if (!cheap && !expensive) {
    std::cerr << "enumerate: genus " << genus << " ("
              << wicks::mode_name(mode)
              << ") exceeds the desk-scale budget guard; pass --expensive to "
                 "force it\n";
    return kExitBudget;
  }

  std::vector<wicks::CensusEntry> entries =
      wicks::enumerate_maximal({genus, mode, budget, threads});

  {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
      file = open_output(output);
      out = &file;
    }
    for (const wicks::CensusEntry& e : entries)
      *out << wicks::census_entry_to_json(e).dump() << "\n";
  }

  wicks::Json summary{{"genus", genus},
                      {"mode", wicks::mode_name(mode)},
                      {"class_count", entries.size()},
                      {"self_generated", true}};
  {
    wicks::Json hist = wicks::Json::object();
    std::map<int, int> h;
    for (const auto& e : entries) ++h[e.aut.order];
    for (const auto& [order, count] : h) hist[std::to_string(order)] = count;
    summary["aut_histogram"] = std::move(hist);
    wicks::Rational mass(0);
    for (const auto& e : entries) mass += wicks::Rational(1, e.aut.order);
    summary["mass"] = wicks::rational_str(mass);
  }
  bool mass_ok = true;
  if (mode == wicks::Mode::oriented) {
    wicks::MassReport rep = wicks::verify_masses(genus, entries);
    summary["mass_checks"] = wicks::mass_report_to_json(rep);
    mass_ok = rep.all_pass;
  }
  if (!summary_path.empty()) {
    std::ofstream sum_file = open_output(summary_path);
    sum_file << summary.dump(2) << "\n";
  } else if (!output.empty()) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cerr << summary.dump(2) << "\n";
  }
  if (!mass_ok) {
    std::cerr << "enumerate: census masses disagree with the closed formulas\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wicks - oriented and nonoriented Wicks form toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands inherit --format
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or csv")
      ->capture_default_str();

  std::string mode_str = "oriented";
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_str, "word mode: oriented or nonoriented")
        ->check(CLI::IsMember({"oriented", "nonoriented"}))
        ->capture_default_str();
  };

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check the Wicks conditions");
  WordInput validate_input;
  validate_input.attach(validate_cmd);
  add_mode(validate_cmd);

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "genus, gluing, symmetry and class data");
  WordInput analyze_input;
  analyze_input.attach(analyze_cmd);
  add_mode(analyze_cmd);

  // canon
  auto* canon_cmd = app.add_subcommand("canon", "canonical representative");
  WordInput canon_input;
  canon_input.attach(canon_cmd);
  add_mode(canon_cmd);
  bool with_reversal = false;
  canon_cmd->add_flag("--with-reversal", with_reversal,
                      "also quotient by reading the cycle backwards");

  // table
  auto* table_cmd =
      app.add_subcommand("table", "exact census rows over a genus range");
  GenusRange table_range{2, 15};
  std::vector<int> table_positional;
  table_cmd->add_option("range", table_positional, "genus range: low [high]")
      ->expected(-2);
  std::vector<int> table_range_opt;
  table_cmd->add_option("--genus-range", table_range_opt, "low and high genus")
      ->expected(2);
  int table_single = 0;
  table_cmd->add_option("--genus", table_single, "single genus");
  std::string table_output;
  table_cmd->add_option("--output", table_output, "write to a file");

  // masses
  auto* masses_cmd = app.add_subcommand("masses", "the four exact masses");
  int masses_genus = 0;
  masses_cmd->add_option("--genus", masses_genus, "genus (>= 1)")->required();

  // radii
  auto* radii_cmd =
      app.add_subcommand("radii", "embedded/covering disk radii");
  GenusRange radii_range{2, 15};
  std::vector<int> radii_range_opt;
  radii_cmd->add_option("--genus-range", radii_range_opt, "low and high genus")
      ->expected(2);
  int radii_single = 0;
  radii_cmd->add_option("--genus", radii_single, "single genus");
  int precision = 15;
  radii_cmd->add_option("--precision", precision, "significant digits")
      ->check(CLI::Range(6, 17))
      ->capture_default_str();

  // enumerate
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "isomorph-free census of maximal forms at one genus");
  int enum_genus = 0;
  enum_cmd->add_option("--genus", enum_genus, "genus")->required();
  add_mode(enum_cmd);
  bool expensive = false;
  enum_cmd->add_flag("--expensive", expensive,
                     "allow searches past the supported desk-scale range");
  wicks::Budget budget;
  enum_cmd->add_option("--budget-nodes", budget.max_nodes, "search node cap")
      ->capture_default_str();
  enum_cmd->add_option("--budget-seconds", budget.max_seconds,
                       "wall clock cap")
      ->capture_default_str();
  int threads = 1;
  enum_cmd->add_option("--threads", threads, "parallel subtree workers")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  std::string enum_output, enum_summary;
  enum_cmd->add_option("--output", enum_output, "census JSON-lines file");
  enum_cmd->add_option("--summary", enum_summary, "summary JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    wicks::Mode mode = wicks::mode_from_name(mode_str);
    if (validate_cmd->parsed())
      return cmd_validate(validate_input, mode, format);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_input, mode, format);
    if (canon_cmd->parsed())
      return cmd_canon(canon_input, mode, with_reversal, format);
    if (table_cmd->parsed()) {
      if (table_positional.size() == 1)
        table_range = {table_positional[0], table_positional[0]};
      else if (table_positional.size() >= 2)
        table_range = {table_positional[0], table_positional[1]};
      if (table_range_opt.size() == 2)
        table_range = {table_range_opt[0], table_range_opt[1]};
      if (table_cmd->count("--genus") > 0)
        table_range = {table_single, table_single};
      return cmd_table(table_range, format, table_output);
    }
    if (masses_cmd->parsed()) return cmd_masses(masses_genus, format);
    if (radii_cmd->parsed()) {
      if (radii_range_opt.size() == 2)
        radii_range = {radii_range_opt[0], radii_range_opt[1]};
      if (radii_cmd->count("--genus") > 0)
        radii_range = {radii_single, radii_single};
      return cmd_radii(radii_range, precision, format);
    }
    if (enum_cmd->parsed())
      return cmd_enumerate(enum_genus, mode, expensive, budget, threads,
                           enum_output, enum_summary);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wicks::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " after "
              << e.nodes_visited << " nodes, " << e.entries_found
              << " classes found so far\n";
    return kExitBudget;
  } catch (const wicks::WordError& e) {
    std::cerr << "invalid word: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
