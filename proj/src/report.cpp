// Copyright 2026 The dsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsg/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace dsg {

using Json = nlohmann::ordered_json;

namespace {

#ifndef DSG_VERSION
#define DSG_VERSION "0.0.0"
#endif

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json provenance(std::uint64_t manifest_hash) {
  Json p;
  p["tool"] = "dsg";
  p["version"] = tool_version();
  p["manifest_hash"] = hex_hash(manifest_hash);
  return p;
}

Json generator_list(const FiniteGroup& g, const std::vector<ElementId>& ids) {
  Json arr = Json::array();
  for (ElementId e : ids) arr.push_back(g.element(e).to_cycle_string());
  return arr;
}

Json optional_size(const std::optional<std::size_t>& v, const char* absent) {
  if (v) return *v;
  return absent;
}

std::string opt_text(const std::optional<std::size_t>& v, const char* absent) {
  return v ? std::to_string(*v) : std::string(absent);
}

Json status_counts(const StatusCounts& c) {
  Json j;
  j["vacuous"] = c.vacuous;
  j["confirmed"] = c.confirmed;
  j["counterexample"] = c.counterexample;
  j["unverified"] = c.unverified;
  return j;
}

char status_letter(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kVacuous:
      return '.';
    case VerdictStatus::kConfirmed:
      return 'C';
    case VerdictStatus::kCounterexample:
      return 'X';
    case VerdictStatus::kUnverified:
      return '?';
  }
  return ' ';
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

const char* tool_version() { return DSG_VERSION; }

std::string hex_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string group_info_json(const SubgroupLattice& lat, const GroupClassification& cls) {
  const FiniteGroup& g = lat.group();
  Json j;
  j["label"] = g.label();
  j["order"] = g.order();
  j["degree"] = g.degree();
  j["generators"] = generator_list(g, g.generator_ids());
  j["content_hash"] = hex_hash(g.content_hash());
  j["subgroup_count"] = lat.size();
  j["nontrivial_proper_subgroups"] = lat.size() >= 2 ? lat.size() - 2 : 0;
  j["conjugacy_classes_of_subgroups"] = lat.conjugacy_class_count();
  j["normal_subgroups"] = lat.normal_subgroups().size();
  j["maximal_subgroups"] = lat.maximal_subgroups().size();
  Json c;
  c["abelian"] = cls.abelian;
  c["p_group"] = cls.p_group;
  if (cls.p_group) c["p"] = cls.p;
  c["dedekind"] = cls.dedekind;
  c["iwasawa"] = cls.iwasawa;
  c["nilpotent"] = cls.nilpotent;
  c["supersolvable"] = cls.supersolvable;
  c["solvable"] = cls.solvable;
  if (cls.solvable) c["derived_length"] = cls.derived_length;
  c["simple"] = cls.simple;
  j["classification"] = c;
  return dump(j);
}

std::string group_info_text(const SubgroupLattice& lat, const GroupClassification& cls) {
  const FiniteGroup& g = lat.group();
  std::ostringstream out;
  out << "group          " << g.label() << '\n'
      << "order          " << g.order() << '\n'
      << "degree         " << g.degree() << '\n'
      << "subgroups      " << lat.size() << " (" << (lat.size() >= 2 ? lat.size() - 2 : 0)
      << " nontrivial proper)\n"
      << "classes        " << lat.conjugacy_class_count() << '\n'
      << "normal         " << lat.normal_subgroups().size() << '\n'
      << "maximal        " << lat.maximal_subgroups().size() << '\n';
  auto flag = [&](const char* name, bool v) {
    out << pad(name, 15) << (v ? "yes" : "no") << '\n';
  };
  flag("abelian", cls.abelian);
  flag("p-group", cls.p_group);
  flag("dedekind", cls.dedekind);
  flag("iwasawa", cls.iwasawa);
  flag("nilpotent", cls.nilpotent);
  flag("supersolvable", cls.supersolvable);
  flag("solvable", cls.solvable);
  flag("simple", cls.simple);
  return out.str();
}

std::string lattice_json(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  Json j;
  j["label"] = g.label();
  j["order"] = g.order();
  j["subgroup_count"] = lat.size();
  Json subs = Json::array();
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    Json s;
    s["id"] = h;
    s["order"] = lat.order(h);
    s["generators"] = generator_list(g, lat.subgroup(h).generators);
    s["normal"] = lat.is_normal(h);
    s["maximal"] = lat.is_maximal(h);
    s["conjugacy_class"] = lat.conjugacy_class(h);
    Json covers = Json::array();
    for (SubgroupId m = h + 1; m < lat.size(); ++m) {
      if (!lat.contains(m, h)) continue;
      bool cover = true;
      lat.supersets(h).for_each([&](std::size_t k) {
        if (k != h && k != m && lat.contains(m, static_cast<SubgroupId>(k))) cover = false;
      });
      if (cover) covers.push_back(m);
    }
    s["covered_by"] = covers;
    subs.push_back(s);
  }
  j["subgroups"] = subs;
  return dump(j);
}

std::string lattice_text(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  std::ostringstream out;
  out << "# " << g.label() << ": " << lat.size() << " subgroups\n";
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    out << 'H' << h << " order=" << lat.order(h) << " class=" << lat.conjugacy_class(h);
    if (lat.is_normal(h)) out << " normal";
    if (lat.is_maximal(h)) out << " maximal";
    out << " gens=[";
    const auto& gens = lat.subgroup(h).generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
      out << (i ? ", " : "") << g.element(gens[i]).to_cycle_string();
    out << "]\n";
  }
  return out.str();
}

std::string graph_json(const SubgroupGraph& g) {
  const auto& lat = *g.lattice;
  Json j;
  j["group"] = lat.group().label();
  j["kind"] = graph_kind_name(g.kind);
  j["vertex_count"] = g.graph.vertex_count();
  j["edge_count"] = g.graph.edge_count();
  Json vs = Json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Json x;
    x["index"] = v;
    x["subgroup"] = g.vertices[v];
    x["order"] = lat.order(g.vertices[v]);
    x["generators"] = generator_list(lat.group(), lat.subgroup(g.vertices[v]).generators);
    vs.push_back(x);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (auto [u, v] : g.graph.edges()) es.push_back(Json::array({u, v}));
  j["edges"] = es;
  return dump(j);
}

std::string graph_text(const SubgroupGraph& g) {
  std::ostringstream out;
  out << "# " << graph_kind_name(g.kind) << " graph of " << g.lattice->group().label() << ": "
      << g.graph.vertex_count() << " vertices, " << g.graph.edge_count() << " edges\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out << "v " << v << " H" << g.vertices[v] << " order=" << g.lattice->order(g.vertices[v])
        << '\n';
  for (auto [u, v] : g.graph.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_dot(const SubgroupGraph& g) {
  std::ostringstream out;
  out << "graph \"" << graph_kind_name(g.kind) << "\" {\n"
      << "  label=\"" << graph_kind_name(g.kind) << "(" << g.lattice->group().label() << ")\";\n"
      << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out << "  v" << v << " [label=\"H" << g.vertices[v] << "\\n|" << g.lattice->order(g.vertices[v])
        << "|\"];\n";
  for (auto [u, v] : g.graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string analysis_json(const SubgroupGraph& g, const AnalysisReport& r) {
  Json j;
  j["group"] = g.lattice->group().label();
  j["kind"] = graph_kind_name(g.kind);
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["isolated_count"] = r.isolated_count;
  j["component_count"] = r.component_count;
  j["girth"] = optional_size(r.girth, "inf");
  j["bipartite"] = r.bipartite;
  j["clique_number"] = optional_size(r.clique_number, "unverified");
  j["clique_lower_bound"] = r.clique_lower_bound;
  j["independence_number"] = optional_size(r.independence_number, "unverified");
  j["independence_lower_bound"] = r.independence_lower_bound;
  j["clawfree"] = r.clawfree;
  j["cograph"] = r.cograph;
  Json uv = Json::array();
  for (auto v : r.universal_vertices) uv.push_back(g.vertices[v]);
  j["universal_vertices"] = uv;
  j["cycle_length"] = r.cycle_length ? Json(*r.cycle_length) : Json(nullptr);
  j["degree_sequence"] = r.degree_sequence;
  return dump(j);
}

std::string analysis_text(const SubgroupGraph& g, const AnalysisReport& r) {
  std::ostringstream out;
  out << "graph            " << graph_kind_name(g.kind) << "(" << g.lattice->group().label()
      << ")\n"
      << "vertices         " << r.vertex_count << '\n'
      << "edges            " << r.edge_count << '\n'
      << "isolated         " << r.isolated_count << '\n'
      << "components       " << r.component_count << '\n'
      << "girth            " << opt_text(r.girth, "inf") << '\n'
      << "bipartite        " << (r.bipartite ? "yes" : "no") << '\n'
      << "clique number    "
      << (r.clique_number ? std::to_string(*r.clique_number)
                          : ">= " + std::to_string(r.clique_lower_bound) + " (unverified)")
      << '\n'
      << "independence     "
      << (r.independence_number
              ? std::to_string(*r.independence_number)
              : ">= " + std::to_string(r.independence_lower_bound) + " (unverified)")
      << '\n'
      << "claw-free        " << (r.clawfree ? "yes" : "no") << '\n'
      << "cograph          " << (r.cograph ? "yes" : "no") << '\n'
      << "universal        " << r.universal_vertices.size() << '\n'
      << "cycle            " << opt_text(r.cycle_length, "no") << '\n';
  return out.str();
}

std::string registry_json() {
  Json arr = Json::array();
  for (const auto& c : theorem_registry()) {
    Json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["hypothesis"] = c.hypothesis;
    j["conclusion"] = c.conclusion;
    j["vacuous_when"] = c.vacuity;
    arr.push_back(j);
  }
  Json out;
  out["provenance"] = provenance(default_corpus().manifest_hash);
  out["theorems"] = arr;
  return dump(out);
}

std::string registry_text() {
  std::ostringstream out;
  for (const auto& c : theorem_registry())
    out << pad(c.id, 8) << c.statement << "\n        if: " << c.hypothesis
        << "\n        then: " << c.conclusion << "\n        vacuous when: " << c.vacuity << '\n';
  return out.str();
}

std::string run_report_json(const RunReport& r) {
  Json j;
  j["provenance"] = provenance(r.manifest_hash);
  j["tier"] = r.tier;
  j["groups"] = r.groups;
  j["theorems"] = r.theorems;
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.matrix.size(); ++i) {
    Json row;
    row["group"] = r.groups[i];
    Json cells = Json::array();
    for (const auto& v : r.matrix[i]) {
      Json c;
      c["theorem"] = v.theorem_id;
      c["status"] = status_name(v.status);
      if (!v.witness.empty()) c["witness"] = v.witness;
      if (!v.detail.empty()) c["detail"] = v.detail;
      cells.push_back(c);
    }
    row["verdicts"] = cells;
    rows.push_back(row);
  }
  j["matrix"] = rows;
  Json summary;
  for (const auto& id : r.theorems) summary[id] = status_counts(r.per_theorem.at(id));
  j["summary"] = summary;
  j["total"] = status_counts(r.total);
  j["exit_code"] = r.exit_code();
  return dump(j);
}

std::string run_report_text(const RunReport& r) {
  std::ostringstream out;
  out << "# dsg " << tool_version() << " manifest " << hex_hash(r.manifest_hash) << " tier "
      << r.tier << '\n'
      << "# C confirmed, . vacuous, X counterexample, ? unverified\n";
  std::size_t width = 5;
  for (const auto& g : r.groups) width = std::max(width, g.size() + 1);
  out << pad("group", width);
  for (const auto& t : r.theorems) out << ' ' << pad(t, 6);
  out << '\n';
  for (std::size_t i = 0; i < r.matrix.size(); ++i) {
    out << pad(r.groups[i], width);
    for (const auto& v : r.matrix[i]) out << ' ' << pad(std::string(1, status_letter(v.status)), 6);
    out << '\n';
  }
  out << "\n# summary (confirmed / vacuous / counterexample / unverified)\n";
  for (const auto& id : r.theorems) {
    const auto& c = r.per_theorem.at(id);
    out << pad(id, 8) << c.confirmed << " / " << c.vacuous << " / " << c.counterexample << " / "
        << c.unverified << '\n';
  }
  bool header = false;
  for (const auto& row : r.matrix)
    for (const auto& v : row) {
      if (v.status != VerdictStatus::kCounterexample && v.status != VerdictStatus::kUnverified)
        continue;
      if (!header) {
        out << "\n# findings\n";
        header = true;
      }
      out << v.theorem_id << ' ' << v.group_label << ' ' << status_name(v.status);
      if (!v.witness.empty()) {
        out << " witness=";
        for (std::size_t k = 0; k < v.witness.size(); ++k) out << (k ? "," : "") << v.witness[k];
      }
      if (!v.detail.empty()) out << " (" << v.detail << ')';
      out << '\n';
    }
  out << "\ntotal: " << r.total.confirmed << " confirmed, " << r.total.vacuous << " vacuous, "
      << r.total.counterexample << " counterexample, " << r.total.unverified << " unverified\n";
  return out.str();
}

std::string hunt_json(const HuntReport& h) {
  Json j;
  j["provenance"] = provenance(h.manifest_hash);
  j["hunt"] = h.id;
  j["statement"] = h.statement;
  j["tier"] = h.tier;
  Json fs = Json::array();
  for (const auto& f : h.findings) {
    Json x;
    x["groups"] = f.groups;
    x["status"] = f.status;
    x["detail"] = f.detail;
    fs.push_back(x);
  }
  j["findings"] = fs;
  j["notes"] = h.notes;
  Json counts = Json::object();
  for (const auto& [k, v] : h.counts) counts[k] = v;
  j["counts"] = counts;
  return dump(j);
}

std::string hunt_text(const HuntReport& h) {
  std::ostringstream out;
  out << "# dsg " << tool_version() << " manifest " << hex_hash(h.manifest_hash) << " tier "
      << h.tier << '\n'
      << "# " << h.id << ": " << h.statement << '\n';
  for (const auto& f : h.findings) {
    for (std::size_t i = 0; i < f.groups.size(); ++i) out << (i ? " ~ " : "") << f.groups[i];
    out << ": " << f.status << " (" << f.detail << ")\n";
  }
  for (const auto& n : h.notes) out << "note: " << n << '\n';
  out << "counts:";
  for (const auto& [k, v] : h.counts) out << ' ' << k << '=' << v;
  out << '\n';
  return out.str();
}

}  // namespace dsg
