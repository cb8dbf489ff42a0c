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

#include "dsg/dsg.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "dsg/cache.hpp"
#include "dsg/classify.hpp"
#include "dsg/corpus.hpp"
#include "dsg/error.hpp"
#include "dsg/graphs.hpp"
#include "dsg/harness.hpp"
#include "dsg/report.hpp"

struct dsg_group {
  std::shared_ptr<const dsg::FiniteGroup> group;
};

struct dsg_lattice {
  std::shared_ptr<const dsg::SubgroupLattice> lattice;
  dsg::CacheOutcome cache = dsg::CacheOutcome::kDisabled;
  std::string warning;
  mutable std::once_flag classified;
  mutable dsg::GroupClassification classification;
};

struct dsg_graph {
  dsg::SubgroupGraph graph;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_warnings;

dsg_status fail(dsg_status code, const std::string& message) {
  last_error = message;
  return code;
}

template <class F>
dsg_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return DSG_OK;
  } catch (const dsg::Error& e) {
    return fail(static_cast<dsg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DSG_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DSG_E_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (!p)
    throw dsg::Error(dsg::ErrorCode::kInvalidArgument, std::string(name) + " must not be null");
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out, "out");
  *out = to_c_string(s);
}

dsg::Corpus load_corpus(const char* manifest_text) {
  if (!manifest_text) return dsg::default_corpus();
  return dsg::parse_manifest(manifest_text);
}

dsg::Tier to_tier(dsg_tier t) {
  switch (t) {
    case DSG_TIER_FAST:
      return dsg::Tier::kFast;
    case DSG_TIER_STANDARD:
      return dsg::Tier::kStandard;
    case DSG_TIER_LONG:
      return dsg::Tier::kLong;
  }
  throw dsg::Error(dsg::ErrorCode::kInvalidArgument, "unknown tier");
}

dsg::GraphKind to_kind(dsg_graph_kind k) {
  switch (k) {
    case DSG_GRAPH_GAMMA:
      return dsg::GraphKind::kGamma;
    case DSG_GRAPH_DELTA:
      return dsg::GraphKind::kDelta;
    case DSG_GRAPH_DIFFERENCE:
      return dsg::GraphKind::kDifference;
    case DSG_GRAPH_DIFFERENCE_STAR:
      return dsg::GraphKind::kDifferenceStar;
  }
  throw dsg::Error(dsg::ErrorCode::kInvalidArgument, "unknown graph kind");
}

dsg::AnalysisBudgets budgets(std::uint64_t clique, std::uint64_t independence) {
  dsg::AnalysisBudgets b;
  if (clique) b.clique = clique;
  if (independence) b.independence = independence;
  return b;
}

dsg::RunOptions run_options(const dsg_run_options* o) {
  dsg::RunOptions r;
  if (!o) return r;
  r.tier = to_tier(o->tier);
  r.threads = o->threads ? o->threads : 1;
  r.bundle.budgets = budgets(o->clique_budget, o->independence_budget);
  if (o->cache_dir) r.bundle.cache_dir = o->cache_dir;
  if (o->theorem_filter) {
    std::stringstream ss(o->theorem_filter);
    std::string id;
    while (std::getline(ss, id, ',')) {
      auto b = id.find_first_not_of(" \t");
      auto e = id.find_last_not_of(" \t");
      if (b != std::string::npos) r.theorem_filter.push_back(id.substr(b, e - b + 1));
    }
    if (r.theorem_filter.empty())
      throw dsg::Error(dsg::ErrorCode::kInvalidArgument, "empty theorem filter");
  }
  return r;
}

void check_format(dsg_format f, bool allow_dot) {
  if (f == DSG_FORMAT_JSON || f == DSG_FORMAT_TEXT || (allow_dot && f == DSG_FORMAT_DOT)) return;
  throw dsg::Error(dsg::ErrorCode::kInvalidArgument, "unsupported output format");
}

}  // namespace

extern "C" {

const char* dsg_version(void) { return dsg::tool_version(); }

const char* dsg_last_error(void) { return last_error.c_str(); }

void dsg_string_free(char* s) { std::free(s); }

void dsg_run_options_init(dsg_run_options* options) {
  if (!options) return;
  options->tier = DSG_TIER_FAST;
  options->theorem_filter = nullptr;
  options->threads = 1;
  options->clique_budget = 0;
  options->independence_budget = 0;
  options->cache_dir = nullptr;
}

dsg_status dsg_group_create(const char* spec, const char* manifest_text, uint64_t order_cap,
                            dsg_group** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    dsg::Corpus corpus = load_corpus(manifest_text);
    dsg::RealizeOptions ro;
    if (order_cap) ro.order_cap = order_cap;
    ro.actions = &corpus.actions;
    std::shared_ptr<const dsg::FiniteGroup> g;
    if (const auto* entry = corpus.find(spec)) {
      auto base = dsg::realize(entry->spec, ro);
      g = std::make_shared<const dsg::FiniteGroup>(base->generators(), entry->label, ro.order_cap);
    } else {
      g = dsg::realize(std::string_view(spec), ro);
    }
    *out = new dsg_group{std::move(g)};
  });
}

void dsg_group_free(dsg_group* group) { delete group; }

dsg_status dsg_group_order(const dsg_group* group, uint64_t* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = group->group->order();
  });
}

dsg_status dsg_group_degree(const dsg_group* group, uint64_t* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = group->group->degree();
  });
}

dsg_status dsg_group_content_hash(const dsg_group* group, uint64_t* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = group->group->content_hash();
  });
}

dsg_status dsg_lattice_create(const dsg_group* group, const char* cache_dir, dsg_lattice** out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = nullptr;
    auto cached = dsg::load_or_build_lattice(group->group, cache_dir ? cache_dir : "");
    auto* l = new dsg_lattice;
    l->lattice = std::move(cached.lattice);
    l->cache = cached.outcome;
    l->warning = std::move(cached.warning);
    *out = l;
  });
}

void dsg_lattice_free(dsg_lattice* lattice) { delete lattice; }

dsg_status dsg_lattice_subgroup_count(const dsg_lattice* lattice, uint64_t* out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = lattice->lattice->size();
  });
}

dsg_status dsg_lattice_cache_outcome(const dsg_lattice* lattice, dsg_cache_outcome* out,
                                     char** warning) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = static_cast<dsg_cache_outcome>(lattice->cache);
    if (warning) *warning = to_c_string(lattice->warning);
  });
}

dsg_status dsg_lattice_group_info(const dsg_lattice* lattice, dsg_format format, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    check_format(format, false);
    std::call_once(lattice->classified,
                   [&] { lattice->classification = dsg::classify(*lattice->lattice); });
    emit(out, format == DSG_FORMAT_JSON
                  ? dsg::group_info_json(*lattice->lattice, lattice->classification)
                  : dsg::group_info_text(*lattice->lattice, lattice->classification));
  });
}

dsg_status dsg_lattice_write(const dsg_lattice* lattice, dsg_format format, char** out) {
  return guarded([&] {
    require(lattice, "lattice");
    check_format(format, false);
    emit(out, format == DSG_FORMAT_JSON ? dsg::lattice_json(*lattice->lattice)
                                        : dsg::lattice_text(*lattice->lattice));
  });
}

dsg_status dsg_graph_create(const dsg_lattice* lattice, dsg_graph_kind kind, dsg_graph** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = nullptr;
    auto k = to_kind(kind);
    dsg::SubgroupGraph g;
    if (k == dsg::GraphKind::kDifferenceStar)
      g = dsg::star_reduction(dsg::build_graph(lattice->lattice, dsg::GraphKind::kDifference));
    else
      g = dsg::build_graph(lattice->lattice, k);
    *out = new dsg_graph{std::move(g)};
  });
}

void dsg_graph_free(dsg_graph* graph) { delete graph; }

dsg_status dsg_graph_vertex_count(const dsg_graph* graph, uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = graph->graph.graph.vertex_count();
  });
}

dsg_status dsg_graph_edge_count(const dsg_graph* graph, uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = graph->graph.graph.edge_count();
  });
}

dsg_status dsg_graph_write(const dsg_graph* graph, dsg_format format, char** out) {
  return guarded([&] {
    require(graph, "graph");
    check_format(format, true);
    switch (format) {
      case DSG_FORMAT_JSON:
        emit(out, dsg::graph_json(graph->graph));
        break;
      case DSG_FORMAT_TEXT:
        emit(out, dsg::graph_text(graph->graph));
        break;
      case DSG_FORMAT_DOT:
        emit(out, dsg::graph_dot(graph->graph));
        break;
    }
  });
}

dsg_status dsg_graph_analyze(const dsg_graph* graph, uint64_t clique_budget,
                             uint64_t independence_budget, dsg_format format, char** out) {
  return guarded([&] {
    require(graph, "graph");
    check_format(format, false);
    auto report = dsg::analyze(graph->graph.graph, budgets(clique_budget, independence_budget));
    emit(out, format == DSG_FORMAT_JSON ? dsg::analysis_json(graph->graph, report)
                                        : dsg::analysis_text(graph->graph, report));
  });
}

dsg_status dsg_graph_isomorphic(const dsg_graph* a, const dsg_graph* b, uint64_t budget,
                                int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = dsg::graphs_isomorphic(a->graph.graph, b->graph.graph,
                                  budget ? budget : dsg::kDefaultIsomorphismBudget)
               ? 1
               : 0;
  });
}

dsg_status dsg_graph_kind_parse(const char* name, dsg_graph_kind* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (dsg::parse_graph_kind(name)) {
      case dsg::GraphKind::kGamma:
        *out = DSG_GRAPH_GAMMA;
        break;
      case dsg::GraphKind::kDelta:
        *out = DSG_GRAPH_DELTA;
        break;
      case dsg::GraphKind::kDifference:
        *out = DSG_GRAPH_DIFFERENCE;
        break;
      case dsg::GraphKind::kDifferenceStar:
        *out = DSG_GRAPH_DIFFERENCE_STAR;
        break;
    }
  });
}

dsg_status dsg_verify(const char* manifest_text, const dsg_run_options* options,
                      dsg_format format, char** out, int* exit_code) {
  return guarded([&] {
    check_format(format, false);
    last_warnings.clear();
    dsg::Corpus corpus = load_corpus(manifest_text);
    auto report = dsg::run_corpus(corpus, run_options(options));
    for (const auto& w : report.warnings) last_warnings += w + "\n";
    if (exit_code) *exit_code = report.exit_code();
    emit(out, format == DSG_FORMAT_JSON ? dsg::run_report_json(report)
                                        : dsg::run_report_text(report));
  });
}

dsg_status dsg_registry(dsg_format format, char** out) {
  return guarded([&] {
    check_format(format, false);
    emit(out, format == DSG_FORMAT_JSON ? dsg::registry_json() : dsg::registry_text());
  });
}

dsg_status dsg_hunt(const char* hunt_id, const char* manifest_text,
                    const dsg_run_options* options, dsg_format format, char** out,
                    uint64_t* counterexamples) {
  return guarded([&] {
    require(hunt_id, "hunt_id");
    check_format(format, false);
    dsg::Corpus corpus = load_corpus(manifest_text);
    auto report = dsg::hunt(hunt_id, corpus, run_options(options));
    if (counterexamples) {
      auto it = report.counts.find("counterexample");
      *counterexamples = it == report.counts.end() ? 0 : it->second;
    }
    emit(out, format == DSG_FORMAT_JSON ? dsg::hunt_json(report) : dsg::hunt_text(report));
  });
}

dsg_status dsg_last_warnings(char** out) {
  return guarded([&] { emit(out, last_warnings); });
}

dsg_status dsg_default_manifest(char** out) {
  return guarded([&] { emit(out, std::string(dsg::default_manifest_text())); });
}

dsg_status dsg_corpus_labels(const char* manifest_text, dsg_tier tier, char** out) {
  return guarded([&] {
    dsg::Corpus corpus = load_corpus(manifest_text);
    std::string labels;
    for (const auto& e : corpus.tier_entries(to_tier(tier))) labels += e.label + "\n";
    emit(out, labels);
  });
}

dsg_status dsg_gap_scan(char** action, char** spec) {
  return guarded([&] {
    require(action, "action");
    require(spec, "spec");
    auto r = dsg::find_gap3249_action();
    *action = to_c_string(r.action.to_string());
    *spec = to_c_string(r.spec.to_string());
  });
}

}  // extern "C"
