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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "examples.hpp"
#include "io.hpp"

namespace stabmmi {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("stabmmi-cli-" + std::string(info->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string &name, const std::string &content) {
        const auto path = (dir_ / name).string();
        std::ofstream(path) << content;
        return path;
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    int run(const std::vector<std::string> &args) {
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(CliTest, EntropyRoundTrip) {
    const auto g6 = file("star.g6", "Cs\n");
    ASSERT_EQ(run({"entropy", g6}), 0) << err_.str();
    const auto records = cli::Json::parse(out_.str());
    ASSERT_EQ(records.size(), 2u);
    EXPECT_FALSE(records[0].at("canonical").get<bool>());
    EXPECT_TRUE(records[1].at("canonical").get<bool>());
    EXPECT_EQ(records[0].at("n"), 4);
    EXPECT_EQ(records[0].at("entropies").at("1"), 1);

    const auto first = out_.str();
    const auto again = file("ev.json", first);
    ASSERT_EQ(run({"entropy", again}), 0) << err_.str();
    EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, EntropyOfLargeGraphOmitsCanonicalForm) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < 9; ++v) {
        edges.emplace_back(0, v);
    }
    const auto json = file("big.json", cli::graph_to_json(Graph::from_edges(9, edges)).dump());
    ASSERT_EQ(run({"entropy", json}), 0);
    EXPECT_EQ(cli::Json::parse(out_.str()).size(), 1u);
    EXPECT_NE(err_.str().find("canonical form omitted"), std::string::npos);
}

TEST_F(CliTest, MmiOnFourStar) {
    const auto g6 = file("star.g6", "Cs\n");
    ASSERT_EQ(run({"mmi", g6}), 0) << err_.str();
    const auto text = out_.str();
    EXPECT_EQ(text.rfind("instance-I,instance-J,instance-K,outcome\n", 0), 0u);
    EXPECT_NE(text.find("# tally: satisfies=0,saturates=6,fails=4"), std::string::npos);
    EXPECT_NE(text.find("1,2,3,F\n"), std::string::npos);
    ASSERT_EQ(run({"mmi", g6, "--skip-full-union"}), 0);
    EXPECT_NE(out_.str().find("# tally: satisfies=0,saturates=0,fails=4"), std::string::npos);
}

TEST_F(CliTest, MmiOnTableauText) {
    const auto txt = file("ghz.txt", examples::ghz4().to_text());
    ASSERT_EQ(run({"mmi", txt}), 0) << err_.str();
    EXPECT_NE(out_.str().find("fails=4"), std::string::npos);
}

TEST_F(CliTest, CircuitTracesGhzTransitions) {
    const auto script = file("ghz.txt", "# GHZ then back\nH 3\nCNOT 3 1\nCNOT 3 2\nCNOT 3 4\nCNOT 3 4\n");
    ASSERT_EQ(run({"circuit", script, "--subsystems", "1;2;3;1,2;1,3;2,3;1,2,3", "--final-tableau",
                   path("final.txt")}),
              0)
        << err_.str();
    const auto text = out_.str();
    EXPECT_NE(text.find("# qubits: 4\n"), std::string::npos);
    EXPECT_NE(text.find("step 3 CNOT 3 2: R = (2,2,2,3,3,3,3)"), std::string::npos);
    EXPECT_NE(text.find("step 4 CNOT 3 4: R = (2,2,2,3,3,3,4)"), std::string::npos);
    EXPECT_NE(text.find("step 5 CNOT 3 4: R = (2,2,2,3,3,3,3)"), std::string::npos);
    EXPECT_NE(text.find("  MMI {1}|{2}|{3}: ST -> F"), std::string::npos);
    EXPECT_NE(text.find("  MMI {1}|{2}|{3}: F -> ST"), std::string::npos);
    const auto after4 = text.substr(text.find("step 4"), text.find("step 5") - text.find("step 4"));
    std::size_t flips = 0;
    for (std::size_t p = after4.find("ST -> F"); p != std::string::npos; p = after4.find("ST -> F", p + 1)) {
        ++flips;
    }
    EXPECT_EQ(flips, 4u);
    EXPECT_TRUE(Tableau::from_text(slurp(path("final.txt"))).same_group(examples::phi_state()));
}

TEST_F(CliTest, CircuitScriptErrors) {
    EXPECT_EQ(run({"circuit", file("bad.txt", "H 1\nFOO 2\n")}), cli::kParse);
    EXPECT_NE(err_.str().find("line 2"), std::string::npos);
    EXPECT_EQ(run({"circuit", file("same.txt", "CNOT 2 2\n")}), cli::kParse);
    EXPECT_EQ(run({"circuit", file("zero.txt", "H 0\n")}), cli::kParse);
    EXPECT_EQ(run({"circuit", file("wide.txt", "H 5\n"), "--qubits", "3"}), cli::kParse);
    EXPECT_EQ(run({"circuit", file("empty.txt", "# nothing\n")}), cli::kUsage);
}

TEST_F(CliTest, ClassifyExplicitAndAutomatic) {
    const auto g6 = file("star.g6", "Cs\n");
    ASSERT_EQ(run({"classify", g6, "--partition", "C=1;I=2;J=3;K=4"}), 0) << err_.str();
    auto j = cli::Json::parse(out_.str());
    EXPECT_EQ(j.at("case"), 3);
    EXPECT_EQ(j.at("outcome"), "Fails");
    EXPECT_TRUE(j.at("distributive").get<bool>());

    ASSERT_EQ(run({"classify", g6}), 0);
    j = cli::Json::parse(out_.str());
    EXPECT_EQ(j.at("case"), 3);

    const auto no_hit = file("cex.json", cli::graph_to_json(examples::four_star_without_partition()).dump());
    ASSERT_EQ(run({"classify", no_hit}), 0);
    j = cli::Json::parse(out_.str());
    EXPECT_TRUE(j.at("partition").is_null());

    const auto path4 = file("path.g6", to_graph6(Graph::from_edges(4, {{1, 2}})) + "\n");
    EXPECT_EQ(run({"classify", path4, "--partition", "C=1;I=2;J=3;K=4"}), cli::kParse);
    EXPECT_EQ(run({"classify", g6, "--partition", "C=1;I=2;J=3"}), cli::kParse);
}

TEST_F(CliTest, ClassifyCaseFourGraph) {
    const auto ng = examples::case4_saturates();
    const auto json = file("c4.json", cli::graph_to_json(ng.graph).dump());
    const auto &p = ng.partition;
    auto list = [](Mask m) {
        std::string s;
        for (auto v : mask_members(m)) {
            s += (s.empty() ? "" : ",") + std::to_string(v + 1);
        }
        return s;
    };
    const auto part = "C=" + list(p.c) + ";I=" + list(p.i) + ";J=" + list(p.j) + ";K=" + list(p.k);
    ASSERT_EQ(run({"classify", json, "--partition", part}), 0) << err_.str();
    const auto j = cli::Json::parse(out_.str());
    EXPECT_EQ(j.at("case"), 4);
    EXPECT_EQ(j.at("outcome"), "Saturates");
    EXPECT_FALSE(j.at("distributive").get<bool>());
}

TEST_F(CliTest, CensusTableRowAndClasses) {
    ASSERT_EQ(run({"census", "4", "--table14"}), 0) << err_.str();
    EXPECT_NE(out_.str().find("\n4,36720,18576,15552,2592,18,6,1\n"), std::string::npos);

    ASSERT_EQ(run({"census", "5", "--classes", "--jobs", "2"}), 0) << err_.str();
    std::istringstream rows(out_.str());
    std::string line;
    std::getline(rows, line);
    EXPECT_EQ(line, "class_id,canonical_vector,state_count,satisfies,saturates,fails,vector_count,representative_graph6");
    std::size_t count = 0;
    while (std::getline(rows, line)) {
        ++count;
    }
    EXPECT_EQ(count, 11u);
}

TEST_F(CliTest, CensusScansAndLimits) {
    ASSERT_EQ(run({"census", "5", "--scan-intersection"}), 0) << err_.str();
    auto j = cli::Json::parse(out_.str());
    EXPECT_EQ(j.at("qualifying"), 135);
    EXPECT_TRUE(j.at("counterexamples").empty());

    ASSERT_EQ(run({"census", "5", "--scan-four-star"}), 0) << err_.str();
    j = cli::Json::parse(out_.str());
    EXPECT_EQ(j.at("failing_vectors"), 16);
    EXPECT_EQ(j.at("violations"), 0);

    EXPECT_EQ(run({"census", "9", "--classes"}), cli::kLimit);
    EXPECT_EQ(run({"census", "7", "--table14", "--source", "groups"}), cli::kLimit);
    EXPECT_EQ(run({"census", "5"}), cli::kUsage);
    EXPECT_EQ(run({"census", "5", "--table14", "--jobs", "0"}), cli::kUsage);
}

TEST_F(CliTest, ReportLinksResolve) {
    const auto census = path("census.json");
    ASSERT_EQ(run({"census", "4", "--classes", "--format", "json", "-o", census}), 0) << err_.str();
    const auto j = cli::Json::parse(slurp(census));
    EXPECT_EQ(j.at("classes").size(), 6u);
    EXPECT_EQ(j.at("distinct_vectors"), 18);

    const auto site = path("site");
    ASSERT_EQ(run({"report", census, "-o", site}), 0) << err_.str();
    const auto index = slurp((fs::path(site) / "index.html").string());
    const std::regex href("href=\"([^\"]+)\"");
    std::size_t links = 0;
    for (std::sregex_iterator it(index.begin(), index.end(), href), end; it != end; ++it) {
        ++links;
        const auto target = fs::path(site) / (*it)[1].str();
        ASSERT_TRUE(fs::exists(target)) << target;
        const auto page = slurp(target.string());
        EXPECT_NE(page.find("href=\"index.html\""), std::string::npos);
    }
    EXPECT_EQ(links, 6u);
}

TEST_F(CliTest, ReportEscapesHtml) {
    const auto census = file("evil.json", R"({"n":3,"classes":[{"id":1,"canonical_vector":"<b>&","state_count":1,
        "tally":{"satisfies":0,"saturates":1,"fails":0},"representative":null}]})");
    ASSERT_EQ(run({"report", census, "-o", path("site")}), 0) << err_.str();
    const auto index = slurp(path("site/index.html"));
    EXPECT_NE(index.find("&lt;b&gt;&amp;"), std::string::npos);
    EXPECT_EQ(index.find("<b>&"), std::string::npos);
    EXPECT_EQ(run({"report", file("bad.json", "{}"), "-o", path("x")}), cli::kParse);
}

TEST_F(CliTest, InputErrorsMapToExitCodes) {
    EXPECT_EQ(run({}), cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
    EXPECT_EQ(run({"entropy", path("missing.g6")}), cli::kParse);
    EXPECT_EQ(run({"entropy", file("bad.g6", "C\n")}), cli::kParse);
    EXPECT_EQ(run({"entropy", file("x.dat", "Cs")}), cli::kParse);
    EXPECT_EQ(run({"entropy", file("bad.txt", "1000\n0010\n")}), cli::kInvariant);
    EXPECT_EQ(run({"entropy", file("bad.json", "{\"n\": 3, \"entropies\": {\"1\": 1}}")}), cli::kParse);
    EXPECT_EQ(run({"mmi", file("two.g6", "A_\n")}), cli::kUsage);
}

TEST(CliIo, PartitionParsing) {
    const auto p = cli::parse_partition("C=1;I=2,3;J=4;K=5", 5);
    EXPECT_EQ(p, (StarPartition{1, 6, 8, 16}));
    EXPECT_THROW(cli::parse_partition("C=1;I=2;J=3", 4), ParseError);
    EXPECT_THROW(cli::parse_partition("C=1;I=2;J=3;K=3", 4), std::exception);
    EXPECT_THROW(cli::parse_partition("C=1;I=2;J=3;K=9", 4), std::exception);
}

TEST(CliIo, GraphJsonIsOneBased) {
    const auto j = cli::graph_to_json(examples::four_star());
    EXPECT_EQ(j.at("n"), 4);
    EXPECT_EQ(j.at("edges")[0], cli::Json::array({1, 2}));
    EXPECT_EQ(cli::graph_from_json(j), examples::four_star());
}

}  // namespace
}  // namespace stabmmi
