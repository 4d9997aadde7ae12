#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergraph.hpp"
#include "lagrangian.hpp"
#include "rational.hpp"

namespace laglab {

enum class DensityStatus { Dense, NotDense, Inconclusive };

enum class CertificateKind {
    CoverPairFailure,  // exact: some pair lies in no edge
    EdgeCountBound,    // exact: m(t-1)^r > t^r C(t-1,r)
    RemarkBound,       // witness weighting beats λ of the one-smaller clique
    LambdaGap,         // numeric: λ(G) - λ(G-v) > delta for every v
    BoundaryOptimum,   // numeric: some G-v re-achieves λ(G) within delta
    None,
};

std::string to_string(DensityStatus s);
std::string to_string(CertificateKind k);

struct DensityConfig {
    OptConfig opt;
    double delta = 1e-7;  // margin separating structural equality from noise
    bool use_exact_certificates = true;
};

struct DensityVerdict {
    DensityStatus status = DensityStatus::Inconclusive;
    CertificateKind certificate = CertificateKind::None;
    std::optional<std::pair<int, int>> uncovered_pair;   // CoverPairFailure
    std::optional<Rational> edge_count_threshold;        // EdgeCountBound
    std::optional<double> remark_bound;                  // RemarkBound: λ(K_{n-1}) beaten
    std::optional<int> boundary_vertex;                  // BoundaryOptimum
    std::optional<double> boundary_gap;                  // λ(G) - re-achieved value
    std::optional<double> lambda;                        // computed λ(G)
    std::optional<double> margin;                        // λ(G) - max_v λ(G-v)
    std::vector<double> per_vertex_lambda;               // λ(G-v), when computed
    std::optional<std::string> theorem_id;               // matching threshold rule, if any
    double delta_used = 0.0;

    std::string to_json() const;
};

// exact necessary condition: a dense graph covers every vertex pair
std::optional<std::pair<int, int>> check_cover_pairs(const Hypergraph& g);

// exact sufficient condition on the edge count; skipped when isolated
// vertices are present (the bound presumes all n vertices active)
std::optional<Rational> check_edge_count(const Hypergraph& g);

// sufficient condition: the best weighting found beats λ(K_{n-1}); sound
// because the comparison uses an exactly evaluated witness
std::optional<double> check_remark22(const Hypergraph& g, const DensityConfig& cfg);

DensityVerdict check_dense(const Hypergraph& g, const DensityConfig& cfg = {});

// Predicted verdict from the threshold rules for graphs that look like a
// clique / clique-minus-one / clique-minus-two plus a tail vertex.
struct TheoremPrediction {
    std::string theorem_id;
    DensityStatus predicted = DensityStatus::Inconclusive;
    // λ(G) must equal λ of this subgraph in the non-dense regimes
    std::optional<Rational> lambda_equals_exact;  // clique case
    std::optional<int> lambda_equals_family;      // s of the H-family
    int t = 0;                                    // the rule's t (vertex count)
};

std::optional<TheoremPrediction> classify_by_theorem(const Hypergraph& g);

}  // namespace laglab
