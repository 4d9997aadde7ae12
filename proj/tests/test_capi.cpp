#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "laglab/laglab.h"

namespace {

struct Graph {
    laglab_graph* g = nullptr;
    ~Graph() { laglab_graph_free(g); }
};

struct Str {
    char* s = nullptr;
    ~Str() { laglab_string_free(s); }
};

laglab_config defaults() {
    laglab_config cfg;
    laglab_config_init(&cfg);
    cfg.starts = 24;
    return cfg;
}

}  // namespace

TEST_CASE("config defaults") {
    laglab_config cfg;
    laglab_config_init(&cfg);
    CHECK(cfg.seed == 0x5EED);
    CHECK(cfg.starts == 64);
    CHECK(cfg.iter_cap == 10000);
    CHECK(cfg.kkt_tol == 1e-9);
    CHECK(cfg.value_tie_tol == 1e-9);
    CHECK(cfg.delta == 1e-7);
    CHECK(cfg.value_tol == 1e-7);
    CHECK(std::strlen(laglab_version()) > 0);
}

TEST_CASE("graph lifecycle and errors") {
    Graph g;
    REQUIRE(laglab_graph_from_family("H1:7", &g.g) == LAGLAB_OK);
    CHECK(laglab_graph_vertex_count(g.g) == 6);
    CHECK(laglab_graph_edge_size(g.g) == 3);
    CHECK(laglab_graph_edge_count(g.g) == 19);

    Graph bad;
    CHECK(laglab_graph_from_family("petersen:5", &bad.g) == LAGLAB_ERR_INVALID_ARGUMENT);
    CHECK(std::string(laglab_error_message()).find("valid families") != std::string::npos);

    Graph parsed;
    REQUIRE(laglab_graph_from_edgelist("3 3\n1 2 3\n", &parsed.g) == LAGLAB_OK);
    CHECK(laglab_graph_edge_count(parsed.g) == 1);

    Graph malformed;
    CHECK(laglab_graph_from_edgelist("3 3\n1 2\n", &malformed.g) == LAGLAB_ERR_PARSE);

    Graph missing;
    CHECK(laglab_graph_from_file("/nonexistent/path.hg", &missing.g) == LAGLAB_ERR_IO);

    CHECK(laglab_graph_from_family(nullptr, &bad.g) == LAGLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("edge-list round trip through the C surface") {
    Graph g;
    REQUIRE(laglab_graph_from_family("remark62:7", &g.g) == LAGLAB_OK);
    Str text;
    REQUIRE(laglab_graph_to_edgelist(g.g, &text.s) == LAGLAB_OK);
    Graph back;
    REQUIRE(laglab_graph_from_edgelist(text.s, &back.g) == LAGLAB_OK);
    Str text2;
    REQUIRE(laglab_graph_to_edgelist(back.g, &text2.s) == LAGLAB_OK);
    CHECK(std::string(text.s) == std::string(text2.s));
}

TEST_CASE("maximize and evaluate") {
    Graph g;
    REQUIRE(laglab_graph_from_family("complete:4:3", &g.g) == LAGLAB_OK);
    laglab_config cfg = defaults();
    laglab_opt_result res;
    std::vector<double> w(4);
    REQUIRE(laglab_maximize(g.g, &cfg, &res, w.data(), w.size()) == LAGLAB_OK);
    CHECK(std::fabs(res.value - 0.0625) <= 1e-9);
    CHECK(res.converged == 1);
    CHECK(res.support_size == 4);

    double val = 0;
    REQUIRE(laglab_evaluate(g.g, w.data(), w.size(), &val) == LAGLAB_OK);
    CHECK(val == res.value);

    std::vector<double> tiny(2);
    CHECK(laglab_maximize(g.g, &cfg, &res, tiny.data(), tiny.size()) ==
          LAGLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("density verdicts through the C surface") {
    laglab_config cfg = defaults();

    Graph dense;
    REQUIRE(laglab_graph_from_family("complete:5:3", &dense.g) == LAGLAB_OK);
    laglab_verdict verdict;
    REQUIRE(laglab_density_status(dense.g, &cfg, &verdict) == LAGLAB_OK);
    CHECK(verdict == LAGLAB_DENSE);

    Graph tail;
    REQUIRE(laglab_graph_from_family("cliquetail:5:7", &tail.g) == LAGLAB_OK);
    REQUIRE(laglab_density_status(tail.g, &cfg, &verdict) == LAGLAB_OK);
    CHECK(verdict == LAGLAB_NOT_DENSE);

    Str json;
    REQUIRE(laglab_density_json(tail.g, &cfg, &json.s) == LAGLAB_OK);
    auto j = nlohmann::json::parse(json.s);
    CHECK(j["status"] == "NotDense");
    CHECK(j["certificate_kind"] == "CoverPairFailure");
}

namespace {

// minimal conformance check against a shipped schema: required keys present,
// enum membership respected
void check_required(const nlohmann::json& schema, const nlohmann::json& doc) {
    for (const auto& key : schema.value("required", nlohmann::json::array()))
        REQUIRE(doc.contains(key.get<std::string>()));
    if (schema.contains("properties")) {
        for (auto& [name, sub] : schema["properties"].items()) {
            if (!doc.contains(name)) continue;
            if (sub.contains("enum")) {
                bool found = false;
                for (const auto& v : sub["enum"]) found = found || v == doc[name];
                CHECK(found);
            }
        }
    }
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(LAGLAB_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("outputs conform to the shipped schemas") {
    laglab_config cfg = defaults();
    auto verdict_schema = load_schema("density_verdict.schema.json");
    for (const char* spec : {"complete:5:3", "cliquetail:5:7", "remark62:6", "H1:7"}) {
        Graph g;
        REQUIRE(laglab_graph_from_family(spec, &g.g) == LAGLAB_OK);
        Str json;
        REQUIRE(laglab_density_json(g.g, &cfg, &json.s) == LAGLAB_OK);
        check_required(verdict_schema, nlohmann::json::parse(json.s));
    }

    auto report_schema = load_schema("verification_report.schema.json");
    Str report;
    REQUIRE(laglab_verify_json("T4.1", 7, 7, 20, 22, 0, 0, &cfg, &report.s, nullptr) == LAGLAB_OK);
    auto doc = nlohmann::json::parse(report.s);
    check_required(report_schema, doc);
    check_required(report_schema["properties"]["summary"], doc["summary"]);
    for (const auto& inst : doc["instances"])
        check_required(report_schema["properties"]["instances"]["items"], inst);
}

TEST_CASE("verify reports through the C surface") {
    laglab_config cfg = defaults();
    Str json;
    int all_pass = 0;
    REQUIRE(laglab_verify_json("T3.1", 5, 5, -1, -1, 0, 0, &cfg, &json.s, &all_pass) == LAGLAB_OK);
    CHECK(all_pass == 1);
    auto j = nlohmann::json::parse(json.s);
    CHECK(j["theorem_id"] == "T3.1");
    CHECK(j["instances"].size() == 4);

    Str csv;
    REQUIRE(laglab_report_csv(json.s, &csv.s) == LAGLAB_OK);
    CHECK(std::string(csv.s).rfind("params,predicted,computed,lambda,margin,pass\n", 0) == 0);

    Str bad;
    CHECK(laglab_report_csv("{not json", &bad.s) == LAGLAB_ERR_PARSE);

    Str demo;
    REQUIRE(laglab_verify_json("R2.4", 7, 7, -1, -1, 0, 0, &cfg, &demo.s, &all_pass) == LAGLAB_OK);
    CHECK(all_pass == 1);

    Str err;
    CHECK(laglab_verify_json("T4.5", 5, 5, -1, -1, 0, 0, &cfg, &err.s, &all_pass) ==
          LAGLAB_ERR_INVALID_ARGUMENT);
    CHECK(std::string(laglab_error_message()).find("t >= 7") != std::string::npos);
}
