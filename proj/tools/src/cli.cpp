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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"

namespace stabmmi::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file(path, content);
    }
}

std::string instance_label(const MmiInstance &m) {
    auto braces = [](Mask a) {
        std::string s = mask_label(a);
        std::replace(s.begin(), s.end(), ' ', ',');
        return "{" + s + "}";
    };
    return braces(m.i) + "|" + braces(m.j) + "|" + braces(m.k);
}

// ---------------------------------------------------------------------------
// entropy

int cmd_entropy(const std::string &input, const std::string &format, const std::string &output, std::ostream &out,
                std::ostream &err) {
    const EntropyVector ev = entropy_of(load_input(input, format));
    Json records = Json::array();
    records.push_back(entropy_record(ev, false));
    if (ev.n() <= 8) {
        records.push_back(entropy_record(canonicalize(ev), true));
    } else {
        err << "note: canonical form omitted (exhaustive canonicalization supports n <= 8)\n";
    }
    emit(output, records.dump(2) + "\n", out);
    return kOk;
}

// ---------------------------------------------------------------------------
// mmi

int cmd_mmi(const std::string &input, const std::string &format, bool skip_full_union, const std::string &output,
            std::ostream &out) {
    const EntropyVector ev = entropy_of(load_input(input, format));
    if (ev.n() < 3) {
        throw UsageError("MMI needs at least 3 parties");
    }
    const auto instances = mmi_instances(ev.n(), !skip_full_union);
    std::ostringstream csv;
    csv << "instance-I,instance-J,instance-K,outcome\n";
    MmiTally tally;
    for (const auto &m : instances) {
        const MmiOutcome o = evaluate_mmi(ev, m);
        tally.add(o);
        csv << mask_label(m.i) << ',' << mask_label(m.j) << ',' << mask_label(m.k) << ',' << outcome_code(o) << '\n';
    }
    csv << "# tally: satisfies=" << tally.satisfies << ",saturates=" << tally.saturates << ",fails=" << tally.fails
        << '\n';
    emit(output, csv.str(), out);
    return kOk;
}

// ---------------------------------------------------------------------------
// circuit

struct Gate {
    std::string name;
    std::size_t a = 0, b = 0;  // 0-based
    std::size_t line = 0;
    std::string text;
};

std::vector<Gate> parse_script(const std::string &text) {
    std::vector<Gate> gates;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        Gate g;
        g.line = number;
        g.name = tok[0];
        std::transform(g.name.begin(), g.name.end(), g.name.begin(), ::toupper);
        const bool two = g.name == "CNOT" || g.name == "CZ";
        const bool one = g.name == "H" || g.name == "S";
        if (!one && !two) {
            throw ParseError("gate script line " + std::to_string(number) + ": unknown gate '" + tok[0] + "'");
        }
        if (tok.size() != (two ? 3u : 2u)) {
            throw ParseError("gate script line " + std::to_string(number) + ": " + g.name + " takes " +
                             (two ? "2" : "1") + " qubit index(es)");
        }
        std::size_t idx[2] = {0, 0};
        for (std::size_t t = 1; t < tok.size(); ++t) {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(tok[t].data(), tok[t].data() + tok[t].size(), v);
            if (ec != std::errc{} || ptr != tok[t].data() + tok[t].size() || v == 0) {
                throw ParseError("gate script line " + std::to_string(number) + ": bad qubit index '" + tok[t] +
                                 "' (1-based)");
            }
            idx[t - 1] = v - 1;
        }
        if (two && idx[0] == idx[1]) {
            throw ParseError("gate script line " + std::to_string(number) + ": " + g.name +
                             " needs two distinct qubits");
        }
        g.a = idx[0];
        g.b = idx[1];
        g.text = g.name + " " + std::to_string(g.a + 1) + (two ? " " + std::to_string(g.b + 1) : "");
        gates.push_back(g);
    }
    return gates;
}

std::vector<Mask> parse_subsystems(const std::string &text, std::size_t n) {
    std::vector<Mask> out;
    if (text.empty()) {
        for (Mask a = 1; a <= full_mask(n); ++a) {
            out.push_back(a);
        }
        return out;
    }
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ';')) {
        Mask m = 0;
        std::stringstream items(part);
        std::string item;
        while (std::getline(items, item, ',')) {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0 || v > n) {
                throw UsageError("--subsystems: bad qubit '" + item + "'");
            }
            m |= Mask{1} << (v - 1);
        }
        if (m == 0) {
            throw UsageError("--subsystems: empty subsystem");
        }
        out.push_back(m);
    }
    return out;
}

int cmd_circuit(const std::string &script, std::size_t qubits, const std::string &subsystems,
                const std::string &final_tableau, const std::string &output, std::ostream &out) {
    const auto gates = parse_script(read_file(script));
    std::size_t n = qubits;
    if (n == 0) {
        for (const auto &g : gates) {
            n = std::max({n, g.a + 1, g.b + 1});
        }
        if (n == 0) {
            throw UsageError("empty script: pass --qubits to fix the register size");
        }
    }
    if (n > kMaxEntropyParties) {
        throw LimitExceeded("circuit: at most 16 qubits are supported");
    }
    for (const auto &g : gates) {
        if (g.a >= n || g.b >= n) {
            throw ParseError("gate script line " + std::to_string(g.line) + ": qubit index exceeds --qubits " +
                             std::to_string(n));
        }
    }
    const auto subs = parse_subsystems(subsystems, n);
    const auto instances = n >= 3 && n <= 12 ? mmi_instances(n, true) : std::vector<MmiInstance>{};

    std::ostringstream text;
    text << "# qubits: " << n << "\n# subsystems:";
    for (std::size_t s = 0; s < subs.size(); ++s) {
        std::string lab = mask_label(subs[s]);
        std::replace(lab.begin(), lab.end(), ' ', ',');
        text << (s ? " | " : " ") << lab;
    }
    text << '\n';

    Tableau t = Tableau::zero_state(n);
    std::vector<MmiOutcome> previous;
    auto report = [&](std::size_t step, const std::string &label) {
        const EntropyVector ev = EntropyVector::of(t);
        text << "step " << step << ' ' << label << ": R = (";
        for (std::size_t s = 0; s < subs.size(); ++s) {
            text << (s ? "," : "") << t.projected_rank(subs[s]);
        }
        text << ")\n";
        std::vector<MmiOutcome> now;
        now.reserve(instances.size());
        for (std::size_t m = 0; m < instances.size(); ++m) {
            now.push_back(mmi_outcome(ev.values(), instances[m]));
            if (!previous.empty() && now[m] != previous[m]) {
                text << "  MMI " << instance_label(instances[m]) << ": " << outcome_code(previous[m]) << " -> "
                     << outcome_code(now[m]) << '\n';
            }
        }
        previous = std::move(now);
    };
    report(0, "init");
    for (std::size_t s = 0; s < gates.size(); ++s) {
        const Gate &g = gates[s];
        if (g.name == "H") {
            t = t.apply_h(g.a);
        } else if (g.name == "S") {
            t = t.apply_s(g.a);
        } else if (g.name == "CNOT") {
            t = t.apply_cnot(g.a, g.b);
        } else {
            t = t.apply_cz(g.a, g.b);
        }
        report(s + 1, g.text);
    }
    emit(output, text.str(), out);
    if (!final_tableau.empty()) {
        write_file(final_tableau, t.to_text());
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string &input, const std::string &format, const std::string &partition,
                 const std::string &output, std::ostream &out) {
    const Graph g = load_graph(input, format);
    Json result;
    if (!partition.empty()) {
        const StarPartition p = parse_partition(partition, g.n());
        if (!is_generalized_star(g, p)) {
            throw ParseError("partition is not a generalized star: an edge joins two of I, J, K");
        }
        result = classification_record(g, p);
    } else {
        if (g.n() < 4) {
            throw UsageError("classify needs at least 4 vertices");
        }
        if (g.n() > 12) {
            throw LimitExceeded("automatic partition search supports at most 12 vertices");
        }
        auto p = find_star_partition(g, true, true);
        if (p) {
            result = classification_record(g, *p);
        } else {
            result = Json{{"partition", nullptr}, {"result", "no qualifying partition"}};
        }
    }
    emit(output, result.dump(2) + "\n", out);
    return kOk;
}

// ---------------------------------------------------------------------------
// census

Json tally_json(const MmiTally &t) {
    return Json{{"satisfies", t.satisfies}, {"saturates", t.saturates}, {"fails", t.fails}};
}

Json representative_json(std::size_t n, const std::optional<std::uint64_t> &code) {
    if (!code) {
        return nullptr;
    }
    const Graph g = graph_from_code(n, *code);
    return Json{{"graph6", to_graph6(g)}, {"edges", graph_to_json(g).at("edges")}};
}

std::string row_csv(const CensusRow &r) {
    std::ostringstream s;
    s << "n,total_states,saturate_all,satisfy_some_fail_none,fail_some,distinct_vectors,classes_up_to_exchange,"
         "failing_vector_count\n"
      << r.n << ',' << r.total_states << ',' << r.saturate_all << ',' << r.satisfy_some_fail_none << ','
      << r.fail_some << ',' << r.distinct_vectors << ',' << r.classes_up_to_exchange << ','
      << r.failing_vector_count << '\n';
    return s.str();
}

Json row_json(const CensusRow &r) {
    return Json{{"n", r.n},
                {"total_states", r.total_states},
                {"saturate_all", r.saturate_all},
                {"satisfy_some_fail_none", r.satisfy_some_fail_none},
                {"fail_some", r.fail_some},
                {"distinct_vectors", r.distinct_vectors},
                {"classes_up_to_exchange", r.classes_up_to_exchange},
                {"failing_vector_count", r.failing_vector_count}};
}

Json census_json(const VectorCensus &c) {
    Json classes = Json::array();
    for (const auto &cls : c.classes) {
        classes.push_back(Json{{"id", cls.id},
                               {"canonical_vector", vector_string(cls.canonical)},
                               {"entropies", entropy_record(cls.canonical, true).at("entropies")},
                               {"state_count", cls.count * c.multiplicity()},
                               {"vector_count", cls.vector_count},
                               {"tally", tally_json(cls.tally)},
                               {"representative", representative_json(c.n, cls.representative_code)}});
    }
    return Json{{"n", c.n},
                {"source", c.source == CensusSource::Graphs ? "graphs" : "groups"},
                {"items", c.items},
                {"distinct_vectors", c.vectors.size()},
                {"classes", classes}};
}

std::string classes_csv(const VectorCensus &c) {
    std::ostringstream s;
    s << "class_id,canonical_vector,state_count,satisfies,saturates,fails,vector_count,representative_graph6\n";
    for (const auto &cls : c.classes) {
        s << cls.id << ',' << vector_string(cls.canonical) << ',' << cls.count * c.multiplicity() << ','
          << cls.tally.satisfies << ',' << cls.tally.saturates << ',' << cls.tally.fails << ',' << cls.vector_count
          << ',';
        if (cls.representative_code) {
            s << to_graph6(graph_from_code(c.n, *cls.representative_code));
        }
        s << '\n';
    }
    return s.str();
}

Json four_star_json(const FourStarReport &r) {
    Json entries = Json::array();
    for (const auto &e : r.entries) {
        Json star = nullptr;
        if (e.star) {
            star = Json{{"center", e.star->center + 1},
                        {"leaves", {e.star->leaves[0] + 1, e.star->leaves[1] + 1, e.star->leaves[2] + 1}}};
        }
        entries.push_back(Json{{"vector", vector_string(e.vector)},
                               {"representative", to_graph6(graph_from_code(r.n, e.representative_code))},
                               {"witness", e.witness ? Json(to_graph6(*e.witness)) : Json(nullptr)},
                               {"star", star},
                               {"orbit_explored", e.orbit_explored},
                               {"budget_exceeded", e.budget_exceeded}});
    }
    return Json{{"n", r.n},
                {"failing_vectors", r.entries.size()},
                {"violations", r.violations()},
                {"budget_exceeded", r.budget_failures()},
                {"entries", entries}};
}

Json intersection_json(const IntersectionReport &r) {
    Json ce = Json::array();
    for (auto code : r.counterexamples) {
        ce.push_back(to_graph6(graph_from_code(r.n, code)));
    }
    return Json{{"n", r.n},
                {"graphs", r.graphs},
                {"qualifying", r.qualifying},
                {"failing", r.failing},
                {"counterexamples", ce}};
}

struct CensusArgs {
    std::size_t n = 0;
    std::string source;
    bool table14 = false, classes = false, scan_four_star = false, scan_intersection = false;
    std::size_t jobs = 1;
    std::size_t budget = kDefaultOrbitBudget;
    std::string format;
    std::string output;
    bool allow_large = false;
};

int cmd_census(const CensusArgs &a, std::ostream &out) {
    const int modes = a.table14 + a.classes + a.scan_four_star + a.scan_intersection;
    if (modes != 1) {
        throw UsageError("census: choose exactly one of --table14, --classes, --scan-four-star, --scan-intersection");
    }
    if (a.jobs == 0) {
        throw UsageError("--jobs must be at least 1");
    }
    CensusOptions opts;
    opts.jobs = a.jobs;
    const std::string source = a.source.empty() ? (a.table14 ? "groups" : "graphs") : a.source;
    const CensusSource src = source == "groups" ? CensusSource::Groups : CensusSource::Graphs;
    if ((a.scan_four_star || a.scan_intersection) && src != CensusSource::Graphs) {
        throw UsageError("scans run over the graph source only");
    }
    if (a.table14) {
        opts.representatives = false;
        const VectorCensus c = vector_census(a.n, src, opts, a.allow_large);
        const CensusRow row = census_row(c);
        if (src == CensusSource::Groups && c.items != stabilizer_group_count(a.n)) {
            throw InvariantViolation("group stream length does not match the product formula");
        }
        emit(a.output, a.format == "json" ? row_json(row).dump(2) + "\n" : row_csv(row), out);
        return kOk;
    }
    if (a.classes) {
        const VectorCensus c = vector_census(a.n, src, opts, a.allow_large);
        emit(a.output, a.format == "json" ? census_json(c).dump(2) + "\n" : classes_csv(c), out);
        return kOk;
    }
    if (a.scan_four_star) {
        const FourStarReport r = four_star_conjecture_scan(a.n, a.budget, a.jobs);
        emit(a.output, four_star_json(r).dump(2) + "\n", out);
        return r.budget_failures() ? kLimit : kOk;
    }
    const IntersectionReport r = nontrivial_intersection_scan(a.n, a.jobs);
    emit(a.output, intersection_json(r).dump(2) + "\n", out);
    return kOk;
}

// ---------------------------------------------------------------------------
// report

std::string html_escape(const std::string &s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out.push_back(ch);
        }
    }
    return out;
}

std::string page(const std::string &title, const std::string &body) {
    return "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>" + html_escape(title) +
           "</title>\n</head>\n<body>\n" + body + "</body>\n</html>\n";
}

int cmd_report(const std::string &input, const std::string &outdir) {
    Json census;
    try {
        census = Json::parse(read_file(input));
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("census JSON: ") + e.what());
    }
    if (!census.is_object() || !census.contains("classes") || !census.at("classes").is_array()) {
        throw ParseError("census JSON: missing 'classes' array (produce it with 'census --classes --format json')");
    }
    std::filesystem::create_directories(outdir);
    const std::string n = census.contains("n") ? census.at("n").dump() : "?";
    std::ostringstream index;
    index << "<h1>Entropy-vector classes, n = " << html_escape(n) << "</h1>\n";
    if (census.at("classes").empty()) {
        index << "<p>No classes.</p>\n";
    } else {
        index << "<table>\n<tr><th>class</th><th>canonical vector</th><th>states</th><th>tally (S, ST, F)</th></tr>\n";
    }
    try {
        for (const auto &cls : census.at("classes")) {
            const std::string id = cls.at("id").dump();
            const std::string file = "class-" + id + ".html";
            const Json &t = cls.at("tally");
            const std::string tally = "(" + t.at("satisfies").dump() + ", " + t.at("saturates").dump() + ", " +
                                      t.at("fails").dump() + ")";
            const std::string vec = cls.at("canonical_vector").get<std::string>();
            index << "<tr><td><a href=\"" << file << "\">" << id << "</a></td><td>" << html_escape(vec) << "</td><td>"
                  << cls.at("state_count").dump() << "</td><td>" << tally << "</td></tr>\n";

            std::ostringstream body;
            body << "<h1>Class " << id << "</h1>\n<p><a href=\"index.html\">index</a></p>\n<dl>\n"
                 << "<dt>canonical vector</dt><dd>" << html_escape(vec) << "</dd>\n"
                 << "<dt>states</dt><dd>" << cls.at("state_count").dump() << "</dd>\n"
                 << "<dt>tally (satisfies, saturates, fails)</dt><dd>" << tally << "</dd>\n";
            const Json &rep = cls.at("representative");
            if (rep.is_object()) {
                std::string edges;
                for (const auto &e : rep.at("edges")) {
                    edges += (edges.empty() ? "" : " ") + std::string("(") + e[0].dump() + "," + e[1].dump() + ")";
                }
                body << "<dt>representative graph6</dt><dd><code>" << html_escape(rep.at("graph6").get<std::string>())
                     << "</code></dd>\n<dt>edges</dt><dd>" << (edges.empty() ? "none" : edges) << "</dd>\n";
            }
            body << "</dl>\n";
            write_file((std::filesystem::path(outdir) / file).string(), page("Class " + id, body.str()));
        }
    } catch (const Json::exception &e) {
        throw ParseError(std::string("census JSON: malformed class entry: ") + e.what());
    }
    if (!census.at("classes").empty()) {
        index << "</table>\n";
    }
    write_file((std::filesystem::path(outdir) / "index.html").string(), page("Classes, n = " + n, index.str()));
    return kOk;
}

std::size_t default_jobs() {
    if (const char *env = std::getenv("STABMMI_JOBS")) {
        std::size_t v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) {
            return v;
        }
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"stabmmi: entanglement entropy and MMI analysis of stabilizer and graph states", "stabmmi"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"auto", "g6", "json", "txt"};

    std::string input, format = "auto", output;

    auto *entropy = app.add_subcommand("entropy", "Entropy vector and canonical form of a graph or tableau");
    entropy->add_option("input", input, "Input file (.g6, .json or .txt)")->required();
    entropy->add_option("--format", format, "Input format")->check(CLI::IsMember(formats));
    entropy->add_option("-o,--output", output, "Write to this file instead of stdout");

    bool skip_full_union = false;
    auto *mmi = app.add_subcommand("mmi", "Evaluate every MMI instance on a state");
    mmi->add_option("input", input, "Input file (.g6, .json or .txt)")->required();
    mmi->add_option("--format", format, "Input format")->check(CLI::IsMember(formats));
    mmi->add_flag("--skip-full-union", skip_full_union, "Drop instances with I u J u K = all parties");
    mmi->add_option("-o,--output", output, "Write to this file instead of stdout");

    std::size_t qubits = 0;
    std::string subsystems, final_tableau;
    auto *circuit = app.add_subcommand("circuit", "Run a Clifford gate script on |0...0> and trace ranks and MMI");
    circuit->add_option("script", input, "Gate script: lines 'H a', 'S a', 'CNOT a b', 'CZ a b'")->required();
    circuit->add_option("--qubits", qubits, "Register size (default: largest index used)");
    circuit->add_option("--subsystems", subsystems, "Subsystems to report, e.g. '1;2;1,2' (default: all)");
    circuit->add_option("--final-tableau", final_tableau, "Write the final tableau (text format) to this file");
    circuit->add_option("-o,--output", output, "Write to this file instead of stdout");

    std::string partition;
    auto *classify_cmd = app.add_subcommand("classify", "Classify a generalized star partition of a graph");
    classify_cmd->add_option("input", input, "Graph file (.g6 or .json)")->required();
    classify_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember(formats));
    classify_cmd->add_option("--partition", partition, "Explicit partition, e.g. 'C=1;I=2;J=3;K=4,5'");
    classify_cmd->add_option("-o,--output", output, "Write to this file instead of stdout");

    CensusArgs ca;
    ca.jobs = default_jobs();
    ca.format = "csv";
    auto *census = app.add_subcommand("census", "Exhaustive censuses and conjecture scans");
    census->add_option("n", ca.n, "Number of qubits / vertices")->required()->check(CLI::PositiveNumber);
    census->add_option("--source", ca.source, "graphs or groups")->check(CLI::IsMember({"graphs", "groups"}));
    census->add_flag("--table14", ca.table14, "State-count row");
    census->add_flag("--classes", ca.classes, "Per-class rows");
    census->add_flag("--scan-four-star", ca.scan_four_star, "Induced four-star scan over failing vectors");
    census->add_flag("--scan-intersection", ca.scan_intersection, "Nontrivial-intersection scan over graphs");
    census->add_option("--jobs", ca.jobs, "Worker threads (default: $STABMMI_JOBS or 1)");
    census->add_option("--budget", ca.budget, "LC-orbit size limit per vector");
    census->add_option("--format", ca.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    census->add_flag("--allow-large", ca.allow_large, "Permit the n = 8 graph census");
    census->add_option("-o,--output", ca.output, "Write to this file instead of stdout");

    std::string outdir;
    auto *report = app.add_subcommand("report", "Render a class census JSON as a static HTML catalog");
    report->add_option("input", input, "Census JSON from 'census --classes --format json'")->required();
    report->add_option("-o,--output", outdir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*entropy) {
            return cmd_entropy(input, format, output, out, err);
        }
        if (*mmi) {
            return cmd_mmi(input, format, skip_full_union, output, out);
        }
        if (*circuit) {
            return cmd_circuit(input, qubits, subsystems, final_tableau, output, out);
        }
        if (*classify_cmd) {
            return cmd_classify(input, format, partition, output, out);
        }
        if (*census) {
            return cmd_census(ca, out);
        }
        if (*report) {
            return cmd_report(input, outdir);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const LimitExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kLimit;
    } catch (const InvariantViolation &e) {
        err << "error: invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInvariant;
    }
    return kUsage;
}

}  // namespace stabmmi::cli
