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

#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace stabmmi::cli {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write output file '" + path + "'");
    }
    out << content;
}

std::string resolve_format(const std::string &path, const std::string &format) {
    if (format != "auto") {
        return format;
    }
    auto ends = [&](std::string_view ext) { return path.size() >= ext.size() && path.ends_with(ext); };
    if (ends(".g6")) {
        return "g6";
    }
    if (ends(".json")) {
        return "json";
    }
    if (ends(".txt")) {
        return "txt";
    }
    throw ParseError("cannot infer the format of '" + path + "'; pass --format g6|json|txt");
}

namespace {

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::size_t json_size(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw ParseError(std::string("JSON field '") + key + "' must be a nonnegative integer");
    }
    return j.at(key).get<std::size_t>();
}

}  // namespace

Graph graph_from_json(const Json &j) {
    const std::size_t n = json_size(j, "n");
    if (n == 0 || n > kMaxParties) {
        throw ParseError("graph JSON: n must be in [1, 64]");
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) {
        throw ParseError("graph JSON: 'edges' must be an array of [u, v] pairs");
    }
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw ParseError("graph JSON: each edge must be a pair of 1-based vertex numbers");
        }
        const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
        if (u == 0 || v == 0 || u > n || v > n) {
            throw ParseError("graph JSON: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has a vertex outside 1.." + std::to_string(n));
        }
        if (u == v) {
            throw ParseError("graph JSON: self-loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph::from_edges(n, edges);
}

Json graph_to_json(const Graph &g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u + 1, v + 1});
    }
    return Json{{"n", g.n()}, {"edges", edges}};
}

Tableau tableau_from_json(const Json &j) {
    const std::size_t n = json_size(j, "n");
    if (!j.at("tableau").is_array()) {
        throw ParseError("tableau JSON: 'tableau' must be an array of bit strings");
    }
    std::string text;
    for (const auto &row : j.at("tableau")) {
        if (!row.is_string()) {
            throw ParseError("tableau JSON: rows must be strings");
        }
        text += row.get<std::string>();
        text += '\n';
    }
    Tableau t = Tableau::from_text(text);
    if (t.n() != n) {
        throw ParseError("tableau JSON: n does not match the number of rows");
    }
    return t;
}

Json entropy_record(const EntropyVector &ev, bool canonical) {
    Json values = Json::object();
    for (Mask a = 1; a < ev.values().size(); ++a) {
        values[std::to_string(a)] = ev[a];
    }
    return Json{{"n", ev.n()}, {"entropies", values}, {"canonical", canonical}};
}

EntropyVector entropy_from_json(const Json &j) {
    if (j.is_array()) {
        for (const auto &rec : j) {
            if (rec.is_object() && !rec.value("canonical", false)) {
                return entropy_from_json(rec);
            }
        }
        throw ParseError("entropy JSON: array holds no non-canonical record");
    }
    const std::size_t n = json_size(j, "n");
    if (n == 0 || n > kMaxEntropyParties) {
        throw ParseError("entropy JSON: n must be in [1, 16]");
    }
    const Json &ent = j.at("entropies");
    if (!ent.is_object() || ent.size() != full_mask(n)) {
        throw ParseError("entropy JSON: 'entropies' must map all 2^n - 1 nonempty masks");
    }
    std::vector<std::uint8_t> values(full_mask(n) + 1, 0);
    for (const auto &[key, value] : ent.items()) {
        Mask a = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), a);
        if (ec != std::errc{} || ptr != key.data() + key.size() || a == 0 || a > full_mask(n)) {
            throw ParseError("entropy JSON: bad mask key '" + key + "'");
        }
        if (!value.is_number_unsigned() || value.get<std::size_t>() > 255) {
            throw ParseError("entropy JSON: entropy for mask " + key + " must be a small nonnegative integer");
        }
        values[a] = value.get<std::uint8_t>();
    }
    return EntropyVector::from_values(n, std::move(values));
}

StateInput load_input(const std::string &path, const std::string &format) {
    const std::string fmt = resolve_format(path, format);
    const std::string text = read_file(path);
    if (fmt == "g6") {
        return from_graph6(text);
    }
    if (fmt == "txt") {
        return Tableau::from_text(text);
    }
    if (fmt != "json") {
        throw ParseError("unknown input format '" + fmt + "'");
    }
    const Json j = parse_json(text);
    try {
        if (j.is_array() || j.contains("entropies")) {
            return entropy_from_json(j);
        }
        if (j.contains("tableau")) {
            return tableau_from_json(j);
        }
        if (j.contains("edges")) {
            return graph_from_json(j);
        }
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed JSON input: ") + e.what());
    }
    throw ParseError("JSON input is neither a graph, a tableau nor an entropy record");
}

Graph load_graph(const std::string &path, const std::string &format) {
    StateInput in = load_input(path, format);
    if (auto *g = std::get_if<Graph>(&in)) {
        return *g;
    }
    throw ParseError("'" + path + "' does not describe a graph");
}

EntropyVector entropy_of(const StateInput &in) {
    return std::visit(
        [](const auto &v) -> EntropyVector {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EntropyVector>) {
                return v;
            } else {
                if (v.n() > kMaxEntropyParties) {
                    throw LimitExceeded("entropy vectors are limited to 16 parties");
                }
                return EntropyVector::of(v);
            }
        },
        in);
}

StarPartition parse_partition(const std::string &text, std::size_t n) {
    StarPartition p;
    bool seen[4] = {false, false, false, false};
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ';')) {
        if (part.empty()) {
            continue;
        }
        const auto eq = part.find('=');
        if (eq != 1) {
            throw ParseError("partition: expected blocks like 'C=1,2', got '" + part + "'");
        }
        const std::string names = "CIJK";
        const auto which = names.find(part[0]);
        if (which == std::string::npos || seen[which]) {
            throw ParseError("partition: unknown or repeated block '" + part.substr(0, 1) + "'");
        }
        seen[which] = true;
        Mask m = 0;
        std::stringstream items(part.substr(2));
        std::string item;
        while (std::getline(items, item, ',')) {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0 || v > n) {
                throw ParseError("partition: bad vertex '" + item + "' (expected 1.." + std::to_string(n) + ")");
            }
            m |= Mask{1} << (v - 1);
        }
        (which == 0 ? p.c : which == 1 ? p.i : which == 2 ? p.j : p.k) = m;
    }
    try {
        p.validate(n);
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
    return p;
}

Json mask_to_json(Mask m) {
    Json out = Json::array();
    for (auto v : mask_members(m)) {
        out.push_back(v + 1);
    }
    return out;
}

Json partition_to_json(const StarPartition &p) {
    return Json{{"C", mask_to_json(p.c)}, {"I", mask_to_json(p.i)}, {"J", mask_to_json(p.j)}, {"K", mask_to_json(p.k)}};
}

Json classification_record(const Graph &g, const StarPartition &p) {
    const StarClassification cls = classify(g, p);
    return Json{{"partition", partition_to_json(p)},
                {"case", cls.case_id},
                {"distributive", cls.distributive},
                {"nontrivial_intersection", cls.nontrivial_intersection},
                {"outcome", std::string(outcome_name(mmi_cij_colspace(g, p)))}};
}

std::string vector_string(const EntropyVector &ev) {
    std::string out;
    for (Mask a = 1; a < ev.values().size(); ++a) {
        if (a > 1) {
            out.push_back(' ');
        }
        out += std::to_string(ev[a]);
    }
    return out;
}

}  // namespace stabmmi::cli
