#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "density.hpp"
#include "families.hpp"
#include "test_util.hpp"

using namespace laglab;

namespace {

Hypergraph family(FamilyKind kind, int t, int r = 3, long long m = -1) {
    FamilySpec spec;
    spec.kind = kind;
    spec.t = t;
    spec.r = r;
    spec.m = m;
    return generate(spec);
}

DensityConfig fast_cfg() {
    DensityConfig cfg;
    cfg.opt.starts = 24;
    return cfg;
}

// the proposition's not-dense pattern: every tail pair except those through 1
Hypergraph prop46a(int t) {
    std::vector<Edge> edges = family(FamilyKind::H1, t).edges();
    for (int i = 2; i < t - 1; ++i)
        for (int j = i + 1; j <= t - 1; ++j) edges.push_back({i, j, t});
    return Hypergraph(t, 3, std::move(edges));
}

}  // namespace

TEST_CASE("check_cover_pairs") {
    Hypergraph g = prop46a(5);
    CHECK(g.edges() == std::vector<Edge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}});
    CHECK(check_cover_pairs(g) == std::make_pair(1, 5));
    CHECK_FALSE(check_cover_pairs(family(FamilyKind::Complete, 5)).has_value());
    CHECK(check_cover_pairs(Hypergraph(4, 3, {{1, 2, 3}})).has_value());
}

TEST_CASE("check_edge_count") {
    // m (t-1)^r > t^r C(t-1, r), exact integers
    auto k5 = check_edge_count(family(FamilyKind::Complete, 5));
    REQUIRE(k5.has_value());
    CHECK(*k5 == Rational(125, 16));  // 10 > 125/16
    CHECK(Rational(10) > *k5);

    auto k4 = check_edge_count(family(FamilyKind::Complete, 4));
    REQUIRE(k4.has_value());
    CHECK(*k4 == Rational(64, 27));

    // 4-vertex graph with 3 edges still clears 64/27
    auto h15 = check_edge_count(family(FamilyKind::H1, 5));
    REQUIRE(h15.has_value());
    CHECK(Rational(3) > Rational(64, 27));

    // skipped when a vertex is isolated
    CHECK_FALSE(check_edge_count(Hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}))
                    .has_value());
    // 15 edges on 6 vertices: 15 < 216*10/125 = 17.28
    CHECK_FALSE(check_edge_count(family(FamilyKind::CliqueTail, 6, 3, 15)).has_value());
}

TEST_CASE("check_remark22") {
    DensityConfig cfg = fast_cfg();
    // uniform witness 10/125 = 0.08 beats lambda(K4)=1/16
    auto fired = check_remark22(family(FamilyKind::Complete, 5), cfg);
    REQUIRE(fired.has_value());
    CHECK(*fired > complete_lambda(4, 3).to_double());

    // the clique-minus-one family on 6 vertices beats lambda(K5)=0.08 as well
    auto h17 = check_remark22(family(FamilyKind::H1, 7), cfg);
    REQUIRE(h17.has_value());
    CHECK(*h17 == doctest::Approx(0.0886621079).epsilon(1e-8));

    // one edge past the threshold: a perturbed clique weighting beats 1/16
    auto ct8 = check_remark22(family(FamilyKind::CliqueTail, 5, 3, 8), cfg);
    REQUIRE(ct8.has_value());
    CHECK(*ct8 > 1.0 / 16);

    // clique plus a thin tail stays at lambda(K4), no certificate
    CHECK_FALSE(check_remark22(family(FamilyKind::CliqueTail, 5, 3, 5), cfg).has_value());
}

TEST_CASE("check_dense on exact-certificate graphs") {
    DensityConfig cfg = fast_cfg();

    auto k4 = check_dense(family(FamilyKind::Complete, 4), cfg);
    CHECK(k4.status == DensityStatus::Dense);
    CHECK(k4.certificate == CertificateKind::EdgeCountBound);

    auto iso = check_dense(Hypergraph(4, 3, {{1, 2, 3}}), cfg);
    CHECK(iso.status == DensityStatus::NotDense);
    CHECK(iso.certificate == CertificateKind::CoverPairFailure);

    auto p46a = check_dense(prop46a(6), cfg);
    CHECK(p46a.status == DensityStatus::NotDense);
    CHECK(p46a.certificate == CertificateKind::CoverPairFailure);
    CHECK(p46a.uncovered_pair == std::make_pair(1, 6));
}

TEST_CASE("check_dense numerical core") {
    DensityConfig cfg = fast_cfg();
    cfg.use_exact_certificates = false;  // force the vertex-deletion path

    auto k4 = check_dense(family(FamilyKind::Complete, 4), cfg);
    CHECK(k4.status == DensityStatus::Dense);
    CHECK(k4.certificate == CertificateKind::LambdaGap);
    CHECK(*k4.margin == doctest::Approx(1.0 / 16 - 1.0 / 27).epsilon(1e-8));
    CHECK(k4.per_vertex_lambda.size() == 4);

    // clique plus a full but deficient tail: the tail vertex re-achieves
    auto boundary = check_dense(family(FamilyKind::CliqueTail, 5, 3, 7), cfg);
    CHECK(boundary.status == DensityStatus::NotDense);
    CHECK(boundary.certificate == CertificateKind::BoundaryOptimum);
    CHECK(*boundary.lambda == doctest::Approx(1.0 / 16).epsilon(1e-8));
    CHECK(std::fabs(*boundary.boundary_gap) <= cfg.delta);

    auto dense_tail = check_dense(family(FamilyKind::CliqueTail, 5, 3, 8), cfg);
    CHECK(dense_tail.status == DensityStatus::Dense);
}

TEST_CASE("check_dense respects the boundary-witness rule") {
    DensityConfig cfg = fast_cfg();
    // single edge spanning all vertices is dense (uniform optimum, interior)
    auto e3 = check_dense(Hypergraph(3, 3, {{1, 2, 3}}), cfg);
    CHECK(e3.status == DensityStatus::Dense);

    // one-vertex graph: the empty subgraph ties at lambda = 0
    auto v1 = check_dense(Hypergraph(1, 2, {}), cfg);
    CHECK(v1.status == DensityStatus::NotDense);

    // complete graphs stay dense for all small t and r < t
    for (int t = 3; t <= 8; ++t)
        for (int r = 2; r < t; ++r) {
            auto v = check_dense(family(FamilyKind::Complete, t, r), cfg);
            CHECK(v.status == DensityStatus::Dense);
        }
}

TEST_CASE("exact certificates never contradict") {
    SplitMix64 rng(31);
    for (int rep = 0; rep < 80; ++rep) {
        int n = 4 + static_cast<int>(rng.next_below(4));
        Hypergraph g = testutil::random_graph(rng, n, 3, 2, 3);
        if (check_cover_pairs(g).has_value()) CHECK_FALSE(check_edge_count(g).has_value());
    }
}

TEST_CASE("verdict stability under more starts") {
    SplitMix64 rng(32);
    DensityConfig lean = fast_cfg();
    DensityConfig rich = fast_cfg();
    rich.opt.starts = 2 * lean.opt.starts;
    for (int rep = 0; rep < 12; ++rep) {
        Hypergraph g = testutil::random_graph(rng, 5 + static_cast<int>(rng.next_below(2)), 3, 3, 4);
        auto a = check_dense(g, lean);
        auto b = check_dense(g, rich);
        if (a.status != DensityStatus::Inconclusive)
            CHECK(to_string(a.status) == to_string(b.status));
    }
}

TEST_CASE("classify_by_theorem") {
    // clique regimes
    auto t31 = classify_by_theorem(family(FamilyKind::CliqueTail, 7, 3, 26));
    REQUIRE(t31.has_value());
    CHECK(t31->theorem_id == "T3.1");
    CHECK(t31->predicted == DensityStatus::NotDense);
    CHECK(*t31->lambda_equals_exact == complete_lambda(6, 3));

    auto c33 = classify_by_theorem(family(FamilyKind::CliqueTail, 7, 3, 31));
    REQUIRE(c33.has_value());
    CHECK(c33->theorem_id == "C3.3");
    CHECK(c33->predicted == DensityStatus::Dense);

    // clique minus one edge
    {
        std::vector<Edge> edges = family(FamilyKind::H1, 7).edges();
        auto pairs = compressed_tail_pairs(1, 7);
        for (int i = 0; i < 8; ++i) edges.push_back({pairs[i].first, pairs[i].second, 7});
        auto t41 = classify_by_theorem(Hypergraph(7, 3, edges));  // m = 27
        REQUIRE(t41.has_value());
        CHECK(t41->theorem_id == "T4.1");
        CHECK(t41->predicted == DensityStatus::NotDense);
        CHECK(t41->lambda_equals_family == 1);
    }

    auto p46a = classify_by_theorem(prop46a(7));
    REQUIRE(p46a.has_value());
    CHECK(p46a->theorem_id == "P4.6a");
    CHECK(p46a->predicted == DensityStatus::NotDense);

    auto p46b = classify_by_theorem(family(FamilyKind::Remark62, 7));
    REQUIRE(p46b.has_value());
    CHECK(p46b->theorem_id == "P4.6b");
    CHECK(p46b->predicted == DensityStatus::Dense);

    // clique minus two edges, t = 12, m = 204 (the largest not-dense count)
    {
        std::vector<Edge> edges = family(FamilyKind::H2, 12).edges();
        auto pairs = compressed_tail_pairs(2, 12);
        for (int i = 0; i < 204 - 163; ++i) edges.push_back({pairs[i].first, pairs[i].second, 12});
        auto t51 = classify_by_theorem(Hypergraph(12, 3, edges));
        REQUIRE(t51.has_value());
        CHECK(t51->theorem_id == "T5.1");
        CHECK(t51->predicted == DensityStatus::NotDense);
        CHECK(t51->lambda_equals_family == 2);
    }

    // the open gap between the regimes stays unclassified
    {
        std::vector<Edge> edges = family(FamilyKind::H1, 7).edges();
        auto pairs = compressed_tail_pairs(1, 7);
        for (int i = 0; i < 9; ++i) edges.push_back({pairs[i].first, pairs[i].second, 7});
        CHECK_FALSE(classify_by_theorem(Hypergraph(7, 3, edges)).has_value());  // m = 28 = bound-2
    }

    // the clique-minus-one family itself is dense via the clique rule one level down
    auto h1self = classify_by_theorem(family(FamilyKind::H1, 7));
    REQUIRE(h1self.has_value());
    CHECK(h1self->theorem_id == "C3.3");
    CHECK(h1self->predicted == DensityStatus::Dense);

    CHECK_FALSE(classify_by_theorem(family(FamilyKind::Complete, 4, 2)).has_value());
}

TEST_CASE("classified graphs agree with the numerical verdict") {
    DensityConfig cfg = fast_cfg();
    std::vector<Hypergraph> graphs;
    graphs.push_back(family(FamilyKind::CliqueTail, 6, 3, 14));
    graphs.push_back(family(FamilyKind::CliqueTail, 6, 3, 17));
    graphs.push_back(prop46a(6));
    graphs.push_back(family(FamilyKind::Remark62, 6));
    graphs.push_back(family(FamilyKind::Remark24, 6));
    for (const Hypergraph& g : graphs) {
        auto pred = classify_by_theorem(g);
        if (!pred) continue;
        auto verdict = check_dense(g, cfg);
        CHECK(to_string(verdict.status) == to_string(pred->predicted));
        CHECK(verdict.theorem_id == pred->theorem_id);
    }
}

TEST_CASE("verdict JSON schema") {
    DensityConfig cfg = fast_cfg();
    auto verdict = check_dense(family(FamilyKind::CliqueTail, 5, 3, 7), cfg);
    auto j = nlohmann::json::parse(verdict.to_json());
    CHECK(j.contains("status"));
    CHECK(j.contains("certificate_kind"));
    CHECK(j.contains("certificate_data"));
    CHECK(j.contains("lambda"));
    CHECK(j.contains("margin"));
    CHECK(j["status"] == "NotDense");
    CHECK(j["theorem_id"] == "T3.1");

    auto cover = check_dense(prop46a(5), cfg);
    auto jc = nlohmann::json::parse(cover.to_json());
    CHECK(jc["certificate_kind"] == "CoverPairFailure");
    CHECK(jc["certificate_data"]["pair"] == nlohmann::json::array({1, 5}));
}
