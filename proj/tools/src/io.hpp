// Copyright 2026 The stabmmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABMMI_TOOLS_IO_HPP
#define STABMMI_TOOLS_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stabmmi/census.hpp"
#include "stabmmi/entropy.hpp"
#include "stabmmi/graph.hpp"
#include "stabmmi/stabilizer.hpp"
#include "stabmmi/star.hpp"

namespace stabmmi::cli {

using Json = nlohmann::ordered_json;

/// Anything an input file can describe.
using StateInput = std::variant<Graph, Tableau, EntropyVector>;

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

/// Resolves "auto" from the extension (.g6, .json, .txt); throws ParseError
/// when the extension is unknown.
std::string resolve_format(const std::string &path, const std::string &format);

/// Parses by format: g6 -> Graph; txt -> Tableau; json -> graph
/// ({"n", "edges"}), tableau ({"n", "tableau"}) or entropy record(s).
StateInput load_input(const std::string &path, const std::string &format);
Graph load_graph(const std::string &path, const std::string &format);

Graph graph_from_json(const Json &j);
Json graph_to_json(const Graph &g);
Tableau tableau_from_json(const Json &j);

Json entropy_record(const EntropyVector &ev, bool canonical);
/// Accepts a record or an array whose first non-canonical record is used.
EntropyVector entropy_from_json(const Json &j);

EntropyVector entropy_of(const StateInput &in);

/// "C=1;I=2,3;J=4;K=5" (1-based) for an n-vertex graph.
StarPartition parse_partition(const std::string &text, std::size_t n);
Json partition_to_json(const StarPartition &p);
Json classification_record(const Graph &g, const StarPartition &p);

/// 1-based vertex list of a mask.
Json mask_to_json(Mask m);
/// Values in ascending mask order from mask 1, space separated.
std::string vector_string(const EntropyVector &ev);

}  // namespace stabmmi::cli

#endif  // STABMMI_TOOLS_IO_HPP
