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

#ifndef DSG_REPORT_HPP_
#define DSG_REPORT_HPP_

#include <string>

#include "dsg/analytics.hpp"
#include "dsg/classify.hpp"
#include "dsg/graphs.hpp"
#include "dsg/harness.hpp"

namespace dsg {

// Serializers. Every output is byte-deterministic for a given input; JSON is
// pretty-printed with two-space indentation and a trailing newline.

const char* tool_version();
std::string hex_hash(std::uint64_t h);

std::string group_info_json(const SubgroupLattice& lat, const GroupClassification& cls);
std::string group_info_text(const SubgroupLattice& lat, const GroupClassification& cls);

std::string lattice_json(const SubgroupLattice& lat);
std::string lattice_text(const SubgroupLattice& lat);

std::string graph_json(const SubgroupGraph& g);
std::string graph_text(const SubgroupGraph& g);
std::string graph_dot(const SubgroupGraph& g);

std::string analysis_json(const SubgroupGraph& g, const AnalysisReport& report);
std::string analysis_text(const SubgroupGraph& g, const AnalysisReport& report);

std::string registry_json();
std::string registry_text();

std::string run_report_json(const RunReport& report);
std::string run_report_text(const RunReport& report);

std::string hunt_json(const HuntReport& report);
std::string hunt_text(const HuntReport& report);

}  // namespace dsg

#endif  // DSG_REPORT_HPP_
