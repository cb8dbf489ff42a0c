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

// dsg: command-line front end over the C API.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dsg/dsg.h"

namespace {

// Thrown on any C API failure; carries the message for stderr.
struct CliFailure {
  std::string message;
};

void check(dsg_status s, const std::string& context) {
  if (s != DSG_OK) throw CliFailure{context + ": " + dsg_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  dsg_string_free(s);
  return out;
}

struct GroupDeleter {
  void operator()(dsg_group* g) const { dsg_group_free(g); }
};
struct LatticeDeleter {
  void operator()(dsg_lattice* l) const { dsg_lattice_free(l); }
};
struct GraphDeleter {
  void operator()(dsg_graph* g) const { dsg_graph_free(g); }
};
using GroupPtr = std::unique_ptr<dsg_group, GroupDeleter>;
using LatticePtr = std::unique_ptr<dsg_lattice, LatticeDeleter>;
using GraphPtr = std::unique_ptr<dsg_graph, GraphDeleter>;

struct Config {
  std::string spec;
  std::string kind = "d";
  std::string format = "json";
  std::string tier = "fast";
  std::uint64_t budget_clique = 50'000'000;
  std::uint64_t budget_indep = 50'000'000;
  std::string cache;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::string> theorems;
  std::string manifest_path;
  std::string output;
  std::string dir;
  bool list = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{"cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary | std::ios::trunc);
  if (!out) throw CliFailure{"cannot write " + c.output};
  out << text;
}

dsg_format to_format(const std::string& f) {
  if (f == "json") return DSG_FORMAT_JSON;
  if (f == "text") return DSG_FORMAT_TEXT;
  return DSG_FORMAT_DOT;
}

dsg_tier to_tier(const std::string& t) {
  if (t == "standard") return DSG_TIER_STANDARD;
  if (t == "long") return DSG_TIER_LONG;
  return DSG_TIER_FAST;
}

const char* cache_arg(const Config& c) { return c.cache.empty() ? nullptr : c.cache.c_str(); }

struct Loaded {
  std::string manifest;
  bool custom = false;
  const char* text() const { return custom ? manifest.c_str() : nullptr; }
};

Loaded load_manifest(const Config& c) {
  Loaded m;
  if (!c.manifest_path.empty()) {
    m.manifest = read_file(c.manifest_path);
    m.custom = true;
  }
  return m;
}

GroupPtr make_group(const Config& c, const Loaded& m) {
  dsg_group* g = nullptr;
  check(dsg_group_create(c.spec.c_str(), m.text(), 0, &g), c.spec);
  return GroupPtr(g);
}

LatticePtr make_lattice(const Config& c, const dsg_group* g) {
  dsg_lattice* l = nullptr;
  check(dsg_lattice_create(g, cache_arg(c), &l), c.spec);
  LatticePtr lp(l);
  dsg_cache_outcome outcome;
  char* warning = nullptr;
  check(dsg_lattice_cache_outcome(l, &outcome, &warning), c.spec);
  std::string w = take(warning);
  if (!w.empty()) std::cerr << "warning: " << w << '\n';
  return lp;
}

GraphPtr make_graph(const std::string& kind, const std::string& spec, const dsg_lattice* l) {
  dsg_graph_kind k;
  check(dsg_graph_kind_parse(kind.c_str(), &k), "--kind");
  dsg_graph* g = nullptr;
  check(dsg_graph_create(l, k, &g), spec);
  return GraphPtr(g);
}

dsg_run_options run_options(const Config& c, const std::string& filter) {
  dsg_run_options o;
  dsg_run_options_init(&o);
  o.tier = to_tier(c.tier);
  o.threads = c.threads;
  o.clique_budget = c.budget_clique;
  o.independence_budget = c.budget_indep;
  o.cache_dir = cache_arg(c);
  o.theorem_filter = filter.empty() ? nullptr : filter.c_str();
  return o;
}

int cmd_group(const Config& c) {
  auto m = load_manifest(c);
  auto g = make_group(c, m);
  auto l = make_lattice(c, g.get());
  char* out = nullptr;
  check(dsg_lattice_group_info(l.get(), to_format(c.format), &out), c.spec);
  write_output(c, take(out));
  return 0;
}

int cmd_lattice(const Config& c) {
  auto m = load_manifest(c);
  auto g = make_group(c, m);
  auto l = make_lattice(c, g.get());
  char* out = nullptr;
  check(dsg_lattice_write(l.get(), to_format(c.format), &out), c.spec);
  write_output(c, take(out));
  return 0;
}

int cmd_graph(const Config& c) {
  auto m = load_manifest(c);
  auto g = make_group(c, m);
  auto l = make_lattice(c, g.get());
  auto gr = make_graph(c.kind, c.spec, l.get());
  char* out = nullptr;
  check(dsg_graph_write(gr.get(), to_format(c.format), &out), c.spec);
  write_output(c, take(out));
  return 0;
}

int cmd_analyze(const Config& c) {
  auto m = load_manifest(c);
  auto g = make_group(c, m);
  auto l = make_lattice(c, g.get());
  auto gr = make_graph(c.kind, c.spec, l.get());
  char* out = nullptr;
  check(dsg_graph_analyze(gr.get(), c.budget_clique, c.budget_indep, to_format(c.format), &out),
        c.spec);
  write_output(c, take(out));
  return 0;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

int cmd_verify(const Config& c) {
  char* out = nullptr;
  if (c.list) {
    check(dsg_registry(to_format(c.format), &out), "verify --list");
    write_output(c, take(out));
    return 0;
  }
  auto m = load_manifest(c);
  std::string filter = join(c.theorems);
  auto o = run_options(c, filter);
  int exit_code = 0;
  check(dsg_verify(m.text(), &o, to_format(c.format), &out, &exit_code), "verify");
  write_output(c, take(out));
  char* warnings = nullptr;
  check(dsg_last_warnings(&warnings), "verify");
  std::string w = take(warnings);
  if (!w.empty()) std::cerr << w;
  return exit_code;
}

int cmd_hunt(const Config& c) {
  auto m = load_manifest(c);
  auto o = run_options(c, "");
  std::vector<std::string> ids;
  if (c.spec == "all")
    ids = {"H-1", "H-2", "H-3", "H-4", "H-5"};
  else
    ids = {c.spec};
  std::string text;
  std::uint64_t total = 0;
  for (const auto& id : ids) {
    char* out = nullptr;
    std::uint64_t counterexamples = 0;
    check(dsg_hunt(id.c_str(), m.text(), &o, to_format(c.format), &out, &counterexamples), id);
    text += take(out);
    total += counterexamples;
  }
  write_output(c, text);
  return total ? 2 : 0;
}

const char* extension(const std::string& format) {
  if (format == "json") return ".json";
  if (format == "text") return ".txt";
  return ".dot";
}

int cmd_export(const Config& c) {
  auto m = load_manifest(c);
  std::vector<std::string> labels;
  if (!c.spec.empty()) {
    labels.push_back(c.spec);
  } else {
    char* out = nullptr;
    check(dsg_corpus_labels(m.text(), to_tier(c.tier), &out), "export");
    std::stringstream ss(take(out));
    for (std::string line; std::getline(ss, line);)
      if (!line.empty()) labels.push_back(line);
  }
  std::filesystem::create_directories(c.dir);
  for (const auto& label : labels) {
    Config one = c;
    one.spec = label;
    auto g = make_group(one, m);
    auto l = make_lattice(one, g.get());
    std::string stem = label;
    for (char& ch : stem)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-' && ch != '.')
        ch = '_';
    for (const char* kind : {"gamma", "delta", "d", "dstar"}) {
      auto gr = make_graph(kind, label, l.get());
      char* out = nullptr;
      check(dsg_graph_write(gr.get(), to_format(c.format), &out), label);
      std::ofstream f(std::filesystem::path(c.dir) / (stem + "." + kind + extension(c.format)),
                      std::ios::binary | std::ios::trunc);
      if (!f) throw CliFailure{"cannot write into " + c.dir};
      f << take(out);
    }
  }
  std::cout << "exported " << labels.size() << " group(s) to " << c.dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup graph toolkit: lattices, graphs, invariants and the theorem harness"};
  app.set_version_flag("--version", std::string(dsg_version()));
  app.require_subcommand(1);
  Config c;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", c.cache, "Lattice cache directory");
  };
  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("--manifest", c.manifest_path, "Corpus manifest file")
        ->check(CLI::ExistingFile);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", c.output, "Write the report to a file");
  };
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--budget-clique", c.budget_clique, "Clique search node budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--budget-indep", c.budget_indep, "Independence search node budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_tier = [&](CLI::App* sub) {
    sub->add_option("--tier", c.tier, "Corpus tier")
        ->check(CLI::IsMember({"fast", "standard", "long"}))
        ->capture_default_str();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", c.kind, "Graph kind")
        ->check(CLI::IsMember({"gamma", "delta", "d", "dstar"}))
        ->capture_default_str();
  };

  auto* group = app.add_subcommand("group", "Order, classification and subgroup counts");
  group->add_option("spec", c.spec, "Group spec or manifest label")->required();
  add_format(group, {"json", "text"});
  add_cache(group);
  add_manifest(group);
  add_output(group);

  auto* lattice = app.add_subcommand("lattice", "Subgroup lattice listing");
  lattice->add_option("spec", c.spec, "Group spec or manifest label")->required();
  add_format(lattice, {"json", "text"});
  add_cache(lattice);
  add_manifest(lattice);
  add_output(lattice);

  auto* graph = app.add_subcommand("graph", "Edge list or DOT drawing of a subgroup graph");
  graph->add_option("spec", c.spec, "Group spec or manifest label")->required();
  add_kind(graph);
  add_format(graph, {"json", "text", "dot"});
  add_cache(graph);
  add_manifest(graph);
  add_output(graph);

  auto* analyze = app.add_subcommand("analyze", "Graph invariants");
  analyze->add_option("spec", c.spec, "Group spec or manifest label")->required();
  add_kind(analyze);
  add_format(analyze, {"json", "text"});
  add_budgets(analyze);
  add_cache(analyze);
  add_manifest(analyze);
  add_output(analyze);

  auto* verify = app.add_subcommand("verify", "Run the theorem registry over a corpus tier");
  add_tier(verify);
  verify->add_option("--theorem", c.theorems, "Theorem ids to run")->delimiter(',');
  verify->add_flag("--list", c.list, "Print the theorem registry and exit");
  add_threads(verify);
  add_budgets(verify);
  add_format(verify, {"json", "text"});
  add_cache(verify);
  add_manifest(verify);
  add_output(verify);

  auto* hunt = app.add_subcommand("hunt", "Scan the corpus for counterexamples to a conjecture");
  hunt->add_option("id", c.spec, "Hunt id (H-1 to H-5) or 'all'")->required();
  add_tier(hunt);
  add_threads(hunt);
  add_budgets(hunt);
  add_format(hunt, {"json", "text"});
  add_cache(hunt);
  add_manifest(hunt);
  add_output(hunt);

  auto* exp = app.add_subcommand("export", "Write all four graphs of one group or a tier");
  exp->add_option("spec", c.spec, "Group spec or manifest label (default: the whole tier)");
  exp->add_option("--dir", c.dir, "Output directory")->required();
  add_tier(exp);
  add_format(exp, {"json", "text", "dot"});
  add_cache(exp);
  add_manifest(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*group) return cmd_group(c);
    if (*lattice) return cmd_lattice(c);
    if (*graph) return cmd_graph(c);
    if (*analyze) return cmd_analyze(c);
    if (*verify) return cmd_verify(c);
    if (*hunt) return cmd_hunt(c);
    if (*exp) return cmd_export(c);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
