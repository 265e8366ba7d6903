#include "wicks/json_io.hpp"

#include <cstdio>

namespace wicks {

namespace {

std::string_view sign_name(VertexSign s) {
  switch (s) {
    case VertexSign::positive: return "positive";
    case VertexSign::negative: return "negative";
    case VertexSign::unsigned_: return "unsigned";
  }
  return "?";
}

std::string_view violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::missing_same_sign: return "missing_same_sign";
    case Violation::Kind::cancellation: return "cancellation";
    case Violation::Kind::inverse_factor_pair: return "inverse_factor_pair";
    case Violation::Kind::repeated_factor_pair: return "repeated_factor_pair";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace

Json word_to_json(const WicksWord& word) {
  return Json{{"mode", mode_name(word.mode)},
              {"symbols", word.symbols},
              {"word", render_word(word)}};
}

WicksWord word_from_json(const Json& j) {
  Mode mode = mode_from_name(j.at("mode").get<std::string>());
  if (j.contains("symbols")) {
    // reindex by first appearance so sparse letter values are accepted
    std::string text;
    for (Symbol s : j.at("symbols").get<std::vector<Symbol>>()) {
      if (s == 0) throw WordError("zero symbol");
      if (!text.empty()) text.push_back(' ');
      text += std::to_string(index_of(s));
      if (s < 0) text.push_back('\'');
    }
    return parse_word(text, mode);
  }
  return parse_word(j.at("word").get<std::string>(), mode);
}

Json report_to_json(const WicksWord& word, const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json item{{"kind", violation_kind_name(v.kind)},
              {"condition", v.condition},
              {"detail", v.detail}};
    if (v.positions[0] >= 0)
      item["positions"] = Json{v.positions[0], v.positions[1]};
    violations.push_back(std::move(item));
  }
  return Json{{"mode", mode_name(word.mode)},
              {"word", render_word(word)},
              {"ok", report.ok},
              {"violations", std::move(violations)}};
}

Json glued_graph_to_json(const GluedGraph& graph) {
  Json vertices = Json::array();
  for (const Vertex& v : graph.vertices) {
    Json item{{"id", v.id}, {"degree", v.degree}, {"corners", v.corners}};
    if (graph.mode == Mode::oriented && v.degree == 3)
      item["sign"] = sign_name(v.sign);
    vertices.push_back(std::move(item));
  }
  return Json{{"v", graph.vertex_count},
              {"e", graph.edge_count},
              {"chi", graph.euler_characteristic},
              {"genus", graph.genus},
              {"vertices", std::move(vertices)}};
}

Json aut_to_json(const AutDescriptor& aut) {
  Json j{{"order", aut.order}, {"generator_shift", aut.generator_shift}};
  if (aut.fixed_edges_r) j["r"] = *aut.fixed_edges_r;
  if (aut.fixed_vertices_s) j["s"] = *aut.fixed_vertices_s;
  if (aut.fixed_vertices_t) j["t"] = *aut.fixed_vertices_t;
  return j;
}

Json labels_to_json(const ClassLabels& labels) {
  Json j{{"base", labels.base}};
  if (labels.order2_r) j["order2_r"] = *labels.order2_r;
  if (labels.order3_st)
    j["order3_st"] = Json{labels.order3_st->first, labels.order3_st->second};
  if (labels.order6_label)
    j["order6_label"] = Json{(*labels.order6_label)[0], (*labels.order6_label)[1],
                             (*labels.order6_label)[2]};
  return j;
}

Json census_entry_to_json(const CensusEntry& entry) {
  Json j{{"word", render_word(entry.word)},
         {"symbols", entry.word.symbols},
         {"mode", mode_name(entry.word.mode)},
         {"genus", entry.genus},
         {"v", entry.vertex_count},
         {"e", entry.edge_count},
         {"chi", entry.euler_characteristic},
         {"degrees", entry.degrees},
         {"aut", aut_to_json(entry.aut)}};
  if (entry.labels) j["classes"] = labels_to_json(*entry.labels);
  return j;
}

Json census_row_to_json(const CensusRow& row) {
  Json j{{"genus", row.genus},
         {"m1", rational_str(row.mass.m1)},
         {"m2", rational_str(row.mass.m2)},
         {"m3", rational_str(row.mass.m3)},
         {"m6", rational_str(row.mass.m6)},
         {"M1", row.M1.str()},
         {"M2", row.M2.str()},
         {"M3", row.M3.str()},
         {"M6", row.M6.str()},
         {"n1", row.n1.str()},
         {"n2", row.n2.str()},
         {"n3", row.n3.str()},
         {"n6", row.n6.str()},
         {"bijection_status", bijection_status_name(row.bijection_status)}};
  if (row.radii) {
    j["beta"] = format_double(row.radii->beta);
    j["R"] = format_double(row.radii->R);
    j["C"] = format_double(row.radii->C);
  }
  return j;
}

Json mass_report_to_json(const MassReport& report) {
  Json checks = Json::array();
  for (const MassCheck& c : report.checks) {
    checks.push_back(Json{{"family", c.family},
                          {"census", rational_str(c.census_mass)},
                          {"formula", rational_str(c.formula_mass)},
                          {"pass", c.pass}});
  }
  return Json{{"genus", report.genus},
              {"checks", std::move(checks)},
              {"all_pass", report.all_pass}};
}

std::string census_row_csv_header() {
  return "genus,m1,m2,m3,m6,M1,M2,M3,M6,n1,n2,n3,n6,bijection_status,beta,R,C";
}

std::string census_row_csv(const CensusRow& row) {
  std::string out = std::to_string(row.genus);
  out += "," + rational_str(row.mass.m1);
  out += "," + rational_str(row.mass.m2);
  out += "," + rational_str(row.mass.m3);
  out += "," + rational_str(row.mass.m6);
  out += "," + row.M1.str();
  out += "," + row.M2.str();
  out += "," + row.M3.str();
  out += "," + row.M6.str();
  out += "," + row.n1.str();
  out += "," + row.n2.str();
  out += "," + row.n3.str();
  out += "," + row.n6.str();
  out += ",";
  out += bijection_status_name(row.bijection_status);
  if (row.radii) {
    out += "," + format_double(row.radii->beta);
    out += "," + format_double(row.radii->R);
    out += "," + format_double(row.radii->C);
  } else {
    out += ",,,";
  }
  return out;
}

}  // namespace wicks
