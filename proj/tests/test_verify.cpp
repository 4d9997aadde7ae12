#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "density.hpp"
#include "families.hpp"
#include "verify.hpp"

using namespace laglab;

namespace {

VerifyConfig fast_cfg() {
    VerifyConfig cfg;
    cfg.density.opt.starts = 24;
    cfg.samples = 3;
    return cfg;
}

double h1_lambda_oracle(int t) {
    double tm1 = t - 1.0;
    double a = (tm1 - std::sqrt(tm1 * tm1 - 12.0)) / 6.0;
    double b = a - a * a;
    return binomial(t - 4, 3) * a * a * a + 3.0 * binomial(t - 4, 2) * a * a * b +
           3.0 * (t - 4) * a * b * b;
}

}  // namespace

TEST_CASE("clique-plus-tail sweeps") {
    VerifyConfig cfg = fast_cfg();
    auto not_dense = verify_theorem("T3.1", {5, 6, -1, -1}, cfg);
    CHECK(not_dense.all_pass());
    CHECK(not_dense.instances.size() == 4 + 7);  // full windows at t=5 and t=6
    for (const auto& inst : not_dense.instances) CHECK(inst.computed == "NotDense");
    CHECK(not_dense.max_deviation <= cfg.value_tol);

    auto dense = verify_theorem("T3.2", {5, 5, -1, -1}, cfg);
    CHECK(dense.all_pass());
    CHECK(dense.instances.size() == 3);  // m = 8, 9, 10
    for (const auto& inst : dense.instances) CHECK(inst.computed == "Dense");

    // C3.3 is an alias
    CHECK(verify_theorem("C3.3", {5, 5, -1, -1}, cfg).theorem_id == "T3.2");
}

TEST_CASE("clique-minus-one sweeps") {
    VerifyConfig cfg = fast_cfg();
    auto t41 = verify_theorem("T4.1", {7, 7, -1, -1}, cfg);
    CHECK(t41.all_pass());
    CHECK(t41.instances.size() == 8);  // m = 20..27
    for (const auto& inst : t41.instances) {
        CHECK(inst.computed == "NotDense");
        CHECK(std::fabs(inst.lambda_target - h1_lambda_oracle(7)) <= 1e-9);
    }

    auto t45 = verify_theorem("T4.5", {7, 7, -1, -1}, cfg);
    CHECK(t45.all_pass());
    CHECK(t45.instances.size() == 4);  // m = 30..33

    auto p46a = verify_theorem("P4.6a", {5, 7, -1, -1}, cfg);
    CHECK(p46a.all_pass());
    CHECK(p46a.instances.size() == 3);

    auto p46b = verify_theorem("P4.6b", {6, 6, -1, -1}, cfg);
    CHECK(p46b.all_pass());
    CHECK(p46b.instances.size() == 2);  // critical-free and one-critical tails
    for (const auto& inst : p46b.instances) {
        CHECK(inst.computed == "Dense");
        CHECK(inst.margin > 1e-8);
    }
}

TEST_CASE("clique-minus-two sweeps, spot checks") {
    VerifyConfig cfg = fast_cfg();
    auto t52 = verify_theorem("T5.2", {9, 9, 76, 77}, cfg);
    CHECK(t52.all_pass());
    CHECK(t52.instances.size() == 6);  // three families, two edge counts

    auto t51 = verify_theorem("T5.1", {12, 12, 165, 166}, cfg);
    CHECK(t51.all_pass());
    CHECK(t51.instances.size() == 6);
    for (const auto& inst : t51.instances) {
        CHECK(inst.computed == "NotDense");
        CHECK(inst.deviation <= cfg.value_tol);
    }
}

TEST_CASE("hypothesis violations are rejected with the clause named") {
    VerifyConfig cfg = fast_cfg();
    CHECK_THROWS_WITH_AS(verify_theorem("T4.5", {5, 5, -1, -1}, cfg),
                         doctest::Contains("t >= 7"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(verify_theorem("T5.1", {11, 11, -1, -1}, cfg),
                         doctest::Contains("t >= 12"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(verify_theorem("T5.2", {8, 8, -1, -1}, cfg),
                         doctest::Contains("t >= 9"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(verify_theorem("T3.1", {6, 6, 5, 30}, cfg),
                         doctest::Contains("C(t-1,3)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(verify_theorem("T9.9", {5, 5, -1, -1}, cfg),
                         doctest::Contains("unknown theorem id"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(probe_conjecture61(2, 6, {0, 0, -1, -1}, cfg),
                         doctest::Contains("r >= 3"), std::invalid_argument);
}

TEST_CASE("conjecture probe") {
    VerifyConfig cfg = fast_cfg();
    // the 3-uniform case is settled; no instance may exceed the clique value
    auto r3 = probe_conjecture61(3, 6, {0, 0, -1, -1}, cfg);
    CHECK(r3.all_pass());
    CHECK(r3.max_deviation <= cfg.value_tol);

    // no-tail case sits exactly at the clique value
    auto exact = probe_conjecture61(3, 6, {0, 0, 10, 10}, cfg);
    CHECK(exact.all_pass());
    CHECK(exact.instances.size() == 1);
    CHECK(std::fabs(exact.instances[0].deviation) <= 1e-10);

    // 4-uniform probe reports margins without asserting
    auto r4 = probe_conjecture61(4, 6, {0, 0, 9, 9}, cfg);
    CHECK(r4.all_pass());
    CHECK(r4.instances.size() == 1 + cfg.samples);
}

TEST_CASE("counterexample demos") {
    VerifyConfig cfg = fast_cfg();
    auto heredity = demo_nonheredity(7, cfg);
    CHECK(heredity.all_pass());
    REQUIRE(heredity.instances.size() == 2);
    CHECK(heredity.instances[0].computed == "Dense");
    CHECK(heredity.instances[1].computed == "NotDense");

    auto monotone = demo_nonmonotonicity(7, cfg);
    CHECK(monotone.all_pass());
    REQUIRE(monotone.instances.size() == 2);
    CHECK(monotone.instances[0].computed == "Dense");
    CHECK(monotone.instances[1].computed == "NotDense");
}

TEST_CASE("extremal search over down-set tails") {
    VerifyConfig cfg = fast_cfg();
    auto s1 = search_extremal(1, 7, 27, 500, cfg);
    CHECK_FALSE(s1.hit_cap);
    CHECK(std::fabs(s1.best_value - h1_lambda_oracle(7)) <= 1e-7);
    CHECK(s1.enumerated > 1);

    // agreement with the sweep's lambda target on the overlapping instance
    auto t41 = verify_theorem("T4.1", {7, 7, 27, 27}, cfg);
    CHECK(std::fabs(s1.best_value - t41.instances[0].lambda_target) <= 1e-7);

    // no tail slots beyond the family itself
    FamilySpec h2spec;
    h2spec.kind = FamilyKind::H2;
    h2spec.t = 7;
    auto s2 = search_extremal(2, 7, generate(h2spec).edge_count(), 100, cfg);
    CHECK(s2.enumerated == 1);
    CHECK(std::fabs(s2.best_value - maximize(generate(h2spec), cfg.density.opt).value) <= 1e-9);

    // a tiny cap still returns the best found so far
    auto capped = search_extremal(1, 7, 25, 3, cfg);
    CHECK(capped.hit_cap);
    CHECK(capped.best_graph.has_value());
    CHECK(capped.best_value > 0);
}

TEST_CASE("reports are reproducible and serialize to the schema") {
    VerifyConfig cfg = fast_cfg();
    auto a = verify_theorem("T4.1", {7, 7, 20, 23}, cfg);
    auto b = verify_theorem("T4.1", {7, 7, 20, 23}, cfg);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].lambda == b.instances[i].lambda);
        CHECK(a.instances[i].pass == b.instances[i].pass);
    }

    auto j = nlohmann::json::parse(a.to_json());
    CHECK(j["theorem_id"] == "T4.1");
    CHECK(j["instances"].is_array());
    CHECK(j["instances"].size() == 4);
    CHECK(j["summary"]["failed"] == 0);
    for (const auto& row : j["instances"]) {
        CHECK(row.contains("params"));
        CHECK(row.contains("predicted"));
        CHECK(row.contains("computed"));
        CHECK(row.contains("pass"));
    }

    std::string csv = a.to_csv();
    CHECK(csv.rfind("params,predicted,computed,lambda,margin,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
