#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "flab/principles.hpp"

namespace flab {

// Reports are nlohmann ordered documents: key order is fixed by construction
// and degrees are rendered as exact decimal strings, so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

inline Json labeling_to_json(const FuzzyLabeling& lab) {
  Json out = Json::array();
  for (const auto& [name, triple] : lab.triples()) {
    Json entry;
    entry["argument"] = name;
    entry["a"] = render_degree(triple.a);
    entry["r"] = render_degree(triple.r);
    entry["u"] = render_degree(triple.u);
    out.push_back(std::move(entry));
  }
  return out;
}

inline Json extension_to_json(const FExtension& ext) {
  Json out = Json::array();
  for (const auto& [name, degree] : ext.degrees.entries()) {
    Json entry;
    entry["argument"] = name;
    entry["degree"] = render_degree(degree);
    out.push_back(std::move(entry));
  }
  return out;
}

inline Json postulate_report_to_json(const PostulateReport& report) {
  Json out;
  out["postulate"] = to_string(report.postulate);
  out["satisfied"] = report.satisfied;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json entry;
    entry["argument"] = w.argument;
    entry["lhs"] = render_rat(w.lhs);
    entry["rhs"] = render_rat(w.rhs);
    witnesses.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

inline const char* solve_domain(Semantics s) {
  switch (s) {
    case Semantics::ConflictFree:
    case Semantics::Admissible:
    case Semantics::JvAdmissible:
    case Semantics::VjAdmissible:
      return "labelings over the characteristic grid";
    default:
      return "complete labelings over the characteristic grid";
  }
}

inline Json labeling_set_report(Semantics s, const LabelingSet& set) {
  Json out;
  out["command"] = "solve";
  out["semantics"] = to_string(s);
  out["domain"] = solve_domain(s);
  out["count"] = set.labelings.size();
  Json labelings = Json::array();
  for (const auto& lab : set.labelings) labelings.push_back(labeling_to_json(lab));
  out["labelings"] = std::move(labelings);
  return out;
}

inline Json extension_set_report(FExtensionKind kind,
                                 const std::vector<FExtension>& extensions) {
  Json out;
  out["command"] = "solve";
  out["kind"] = std::string(to_string(kind)) + " f-extension";
  out["count"] = extensions.size();
  Json list = Json::array();
  for (const auto& ext : extensions) list.push_back(extension_to_json(ext));
  out["extensions"] = std::move(list);
  return out;
}

inline Json check_report(const std::map<Postulate, PostulateReport>& reports) {
  Json out;
  out["command"] = "check";
  Json list = Json::array();
  std::size_t violations = 0;
  for (const auto& [p, report] : reports) {
    if (!report.satisfied) ++violations;
    list.push_back(postulate_report_to_json(report));
  }
  out["postulates"] = std::move(list);
  out["violations"] = violations;
  return out;
}

inline Json values_report(const std::vector<Degree>& values) {
  Json out;
  out["command"] = "enumerate-values";
  out["count"] = values.size();
  Json list = Json::array();
  for (const Degree& d : values) list.push_back(render_degree(d));
  out["values"] = std::move(list);
  return out;
}

// Rows are semantics, columns are principles, mirroring the usual
// satisfaction-table layout.
inline Json sweep_report(const SweepResult& sweep) {
  Json out;
  out["command"] = "principles";
  out["seed"] = sweep.family.seed;
  out["count"] = sweep.family.count;
  out["max_args"] = sweep.family.max_args;
  Json grid = Json::array();
  for (const Degree& d : sweep.family.degree_grid) grid.push_back(render_degree(d));
  out["degree_grid"] = std::move(grid);
  out["note"] =
      "no-violation-found reports a fuzzing outcome, not a proof of "
      "satisfaction";
  Json table;
  for (Semantics s : all_semantics()) {
    Json row;
    for (Principle p : all_principles())
      row[to_string(p)] = to_string(sweep.cell(s, p).outcome);
    table[to_string(s)] = std::move(row);
  }
  out["table"] = std::move(table);
  Json trials;
  for (Semantics s : all_semantics()) {
    Json row;
    for (Principle p : all_principles()) row[to_string(p)] = sweep.cell(s, p).trials;
    trials[to_string(s)] = std::move(row);
  }
  out["trials"] = std::move(trials);
  Json witnesses = Json::array();
  for (const auto& verdict : sweep.cells) {
    if (!verdict.witness) continue;
    Json entry;
    entry["semantics"] = to_string(verdict.semantics);
    entry["principle"] = to_string(verdict.principle);
    entry["fas"] = verdict.witness->fas_text;
    entry["detail"] = verdict.witness->detail;
    witnesses.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

inline std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace flab
