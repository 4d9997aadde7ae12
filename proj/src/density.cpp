#include "density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace laglab {

std::string to_string(DensityStatus s) {
    switch (s) {
        case DensityStatus::Dense: return "Dense";
        case DensityStatus::NotDense: return "NotDense";
        default: return "Inconclusive";
    }
}

std::string to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::CoverPairFailure: return "CoverPairFailure";
        case CertificateKind::EdgeCountBound: return "EdgeCountBound";
        case CertificateKind::RemarkBound: return "RemarkBound";
        case CertificateKind::LambdaGap: return "LambdaGap";
        case CertificateKind::BoundaryOptimum: return "BoundaryOptimum";
        default: return "None";
    }
}

std::optional<std::pair<int, int>> check_cover_pairs(const Hypergraph& g) {
    CoverCheck c = covers_all_pairs(g);
    if (c.all_covered) return std::nullopt;
    return c.uncovered;
}

std::optional<Rational> check_edge_count(const Hypergraph& g) {
    const int t = g.n(), r = g.r();
    const long long m = g.edge_count();
    if (t < 2 || m == 0) return std::nullopt;
    std::vector<int> degree(t + 1, 0);
    for (const Edge& e : g.edges())
        for (int v : e) ++degree[v];
    for (int v = 1; v <= t; ++v)
        if (degree[v] == 0) return std::nullopt;  // bound presumes every vertex active
    try {
        Rational threshold = Rational(ipow(t, r)) * Rational(binomial(t - 1, r), ipow(t - 1, r));
        if (Rational(m) > threshold) return threshold;
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> check_remark22(const Hypergraph& g, const DensityConfig& cfg) {
    if (g.n() < 2 || g.edge_count() == 0) return std::nullopt;
    double bound = complete_lambda(g.n() - 1, g.r()).to_double();
    OptimizationResult res = maximize(g, cfg.opt);
    // the guard absorbs evaluation roundoff (a below-threshold dust weight can
    // push the witness value one ulp past an exactly attained bound)
    if (res.value > bound + 1e-12) return res.value;
    return std::nullopt;
}

DensityVerdict check_dense(const Hypergraph& g, const DensityConfig& cfg) {
    DensityVerdict v;
    v.delta_used = cfg.delta;
    if (auto pred = classify_by_theorem(g)) v.theorem_id = pred->theorem_id;

    if (g.n() == 1) {
        v.status = DensityStatus::NotDense;
        v.certificate = CertificateKind::BoundaryOptimum;
        v.boundary_vertex = 1;
        v.boundary_gap = 0.0;
        v.lambda = 0.0;
        return v;
    }

    if (cfg.use_exact_certificates) {
        if (auto pair = check_cover_pairs(g)) {
            v.status = DensityStatus::NotDense;
            v.certificate = CertificateKind::CoverPairFailure;
            v.uncovered_pair = pair;
            return v;
        }
        if (auto threshold = check_edge_count(g)) {
            v.status = DensityStatus::Dense;
            v.certificate = CertificateKind::EdgeCountBound;
            v.edge_count_threshold = threshold;
            return v;
        }
        if (auto witness = check_remark22(g, cfg)) {
            v.status = DensityStatus::Dense;
            v.certificate = CertificateKind::RemarkBound;
            v.remark_bound = complete_lambda(g.n() - 1, g.r()).to_double();
            v.lambda = witness;
            return v;
        }
    }

    // numerical core: compare λ(G) against every single-vertex deletion
    OptimizationResult res = maximize(g, cfg.opt);
    v.lambda = res.value;
    bool all_converged = res.converged;
    v.per_vertex_lambda.assign(g.n(), 0.0);
    double best_sub = -std::numeric_limits<double>::infinity();
    int best_vertex = 1;
    OptimizationResult best_sub_res;
    for (int u = 1; u <= g.n(); ++u) {
        std::vector<int> keep;
        for (int w = 1; w <= g.n(); ++w)
            if (w != u) keep.push_back(w);
        OptimizationResult sub = maximize_on_support(g, keep, cfg.opt);
        all_converged = all_converged && sub.converged;
        v.per_vertex_lambda[u - 1] = sub.value;
        if (sub.value > best_sub) {
            best_sub = sub.value;
            best_vertex = u;
            best_sub_res = std::move(sub);
        }
    }
    v.margin = res.value - best_sub;

    if (*v.margin > cfg.delta) {
        if (all_converged) {
            v.status = DensityStatus::Dense;
            v.certificate = CertificateKind::LambdaGap;
        } else {
            v.status = DensityStatus::Inconclusive;  // margins not trustworthy
            v.certificate = CertificateKind::None;
        }
        return v;
    }

    // boundary candidate: re-evaluate its witness on G directly
    double reachieved = evaluate(g, best_sub_res.weighting);
    if (reachieved >= res.value - cfg.delta) {
        v.status = DensityStatus::NotDense;
        v.certificate = CertificateKind::BoundaryOptimum;
        v.boundary_vertex = best_vertex;
        v.boundary_gap = res.value - reachieved;
        return v;
    }
    v.status = DensityStatus::Inconclusive;
    v.certificate = CertificateKind::None;
    return v;
}

namespace {

// missing-edge counts of every (n-1)-vertex induced subgraph
struct MissingProfile {
    int min_missing = 0;
    int deleted_vertex = 0;  // largest v attaining the minimum
    std::vector<Edge> missing_edges;  // within V \ {deleted_vertex}
};

MissingProfile missing_profile(const Hypergraph& g) {
    const int n = g.n(), r = g.r();
    MissingProfile p;
    p.min_missing = std::numeric_limits<int>::max();
    for (int v = 1; v <= n; ++v) {
        int present = 0;
        for (const Edge& e : g.edges())
            if (!std::binary_search(e.begin(), e.end(), v)) ++present;
        int missing = static_cast<int>(binomial(n - 1, r)) - present;
        if (missing <= p.min_missing) {
            p.min_missing = missing;
            p.deleted_vertex = v;
        }
    }
    if (p.min_missing > 0 && p.min_missing <= 4) {
        // enumerate the absent edges of the witness subgraph
        std::vector<int> keep;
        for (int w = 1; w <= n; ++w)
            if (w != p.deleted_vertex) keep.push_back(w);
        Edge idx(r);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == r) {
                if (!g.has_edge(idx)) p.missing_edges.push_back(idx);
                return;
            }
            for (int i = lo; i < static_cast<int>(keep.size()) - (r - pos - 1); ++i) {
                idx[pos] = keep[i];
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return p;
}

}  // namespace

std::optional<TheoremPrediction> classify_by_theorem(const Hypergraph& g) {
    const int t = g.n(), r = g.r();
    const long long m = g.edge_count();
    if (r < 3 || t - 1 < r) return std::nullopt;

    MissingProfile prof = missing_profile(g);
    TheoremPrediction pred;
    pred.t = t;

    if (prof.min_missing == 0) {
        // clique of order t-1 present
        if (r == 3) {
            long long lo = binomial(t - 1, 3);
            long long hi = lo + binomial(t - 2, 2);
            if (m >= hi + 1) {
                pred.theorem_id = "C3.3";
                pred.predicted = DensityStatus::Dense;
                return pred;
            }
            if (m >= lo) {
                pred.theorem_id = "T3.1";
                pred.predicted = DensityStatus::NotDense;
                pred.lambda_equals_exact = complete_lambda(t - 1, 3);
                return pred;
            }
            return std::nullopt;
        }
        if (m >= binomial(t - 1, r) + binomial(t - 2, r - 1) + 1) {
            pred.theorem_id = "T3.2";
            pred.predicted = DensityStatus::Dense;
            return pred;
        }
        return std::nullopt;
    }

    if (r != 3) return std::nullopt;
    const long long lo = binomial(t - 1, 3);
    const long long hi = lo + binomial(t - 2, 2);

    if (prof.min_missing == 1 && t >= 5) {
        // clique minus one edge, and no full clique of order t-1 anywhere
        if (m >= lo && m <= hi - 3) {
            pred.theorem_id = "T4.1";
            pred.predicted = DensityStatus::NotDense;
            pred.lambda_equals_family = 1;
            return pred;
        }
        if (t >= 7 && m >= hi && m <= binomial(t, 3)) {
            pred.theorem_id = "T4.5";
            pred.predicted = DensityStatus::Dense;
            return pred;
        }
        if (m == hi - 1) {
            if (check_cover_pairs(g)) {
                pred.theorem_id = "P4.6a";
                pred.predicted = DensityStatus::NotDense;
                return pred;
            }
            const Edge& gap = prof.missing_edges.front();
            int tail = prof.deleted_vertex;
            int critical = 0;
            for (int drop = 0; drop < 3; ++drop) {
                Edge e;
                for (int j = 0; j < 3; ++j)
                    if (j != drop) e.push_back(gap[j]);
                e.push_back(tail);
                std::sort(e.begin(), e.end());
                if (g.has_edge(e)) ++critical;
            }
            if (critical <= 1) {
                pred.theorem_id = "P4.6b";
                pred.predicted = DensityStatus::Dense;
                return pred;
            }
        }
        return std::nullopt;
    }

    if (prof.min_missing == 2) {
        // clique minus two edges, and no clique-minus-one anywhere
        const Edge& a = prof.missing_edges[0];
        const Edge& b = prof.missing_edges[1];
        Edge shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        int s = shared.size() == 2 ? 2 : shared.size() == 1 ? 3 : 4;
        if (t >= 12 && m >= lo && m <= hi - 6) {
            pred.theorem_id = "T5.1";
            pred.predicted = DensityStatus::NotDense;
            pred.lambda_equals_family = s;
            return pred;
        }
        if (t >= 9 && m >= hi - 1 && m <= binomial(t, 3)) {
            pred.theorem_id = "T5.2";
            pred.predicted = DensityStatus::Dense;
            return pred;
        }
        return std::nullopt;
    }

    return std::nullopt;
}

std::string DensityVerdict::to_json() const {
    nlohmann::json j;
    j["status"] = laglab::to_string(status);
    j["certificate_kind"] = laglab::to_string(certificate);
    nlohmann::json data = nlohmann::json::object();
    switch (certificate) {
        case CertificateKind::CoverPairFailure:
            data["pair"] = {uncovered_pair->first, uncovered_pair->second};
            break;
        case CertificateKind::EdgeCountBound:
            data["threshold"] = edge_count_threshold->str();
            break;
        case CertificateKind::RemarkBound:
            data["clique_bound"] = *remark_bound;
            break;
        case CertificateKind::LambdaGap:
            data["margin"] = *margin;
            data["per_vertex_lambda"] = per_vertex_lambda;
            break;
        case CertificateKind::BoundaryOptimum:
            data["vertex"] = *boundary_vertex;
            data["gap"] = *boundary_gap;
            break;
        case CertificateKind::None:
            break;
    }
    j["certificate_data"] = data;
    j["lambda"] = lambda ? nlohmann::json(*lambda) : nlohmann::json();
    j["margin"] = margin ? nlohmann::json(*margin) : nlohmann::json();
    if (theorem_id) j["theorem_id"] = *theorem_id;
    j["delta"] = delta_used;
    return j.dump(2);
}

}  // namespace laglab
