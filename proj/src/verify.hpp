#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "density.hpp"
#include "families.hpp"
#include "hypergraph.hpp"
#include "lagrangian.hpp"

namespace laglab {

struct VerifyConfig {
    DensityConfig density;
    double value_tol = 1e-7;  // λ-equality tolerance, looser than optimizer tolerances
    int samples = 20;         // random instances per edge count in the conjecture probe
    long long downset_cap = 1'000'000;
};

struct VerifyInstance {
    std::string params;
    std::string predicted;
    std::string computed;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double lambda_target = std::numeric_limits<double>::quiet_NaN();
    double deviation = std::numeric_limits<double>::quiet_NaN();
    double margin = std::numeric_limits<double>::quiet_NaN();
    bool pass = false;
};

struct VerificationReport {
    std::string theorem_id;
    std::vector<VerifyInstance> instances;
    int passed = 0;
    int failed = 0;
    double max_deviation = 0.0;
    double wall_seconds = 0.0;

    bool all_pass() const { return failed == 0; }
    void finalize();
    std::string to_json() const;
    std::string to_csv() const;
};

struct SweepRange {
    int t_lo = 0;
    int t_hi = 0;
    long long m_lo = -1;  // -1: rule default
    long long m_hi = -1;
};

// ids: T3.1, T3.2 (alias C3.3), T4.1, T4.5, P4.6a, P4.6b, T5.1, T5.2
VerificationReport verify_theorem(const std::string& id, const SweepRange& range,
                                  const VerifyConfig& cfg = {});

// Sweeps clique-plus-tail r-graphs and reports λ(G) - λ(K_{t-1}) margins.
// A margin above value_tol is flagged for inspection, never asserted as a
// counterexample; at r = 3 a flag fails the run (the threshold rules prove
// that case).
VerificationReport probe_conjecture61(int r, int t, const SweepRange& m_range,
                                      const VerifyConfig& cfg = {});

// dense graph with a non-dense induced subgraph
VerificationReport demo_nonheredity(int t, const VerifyConfig& cfg = {});
// dense graph that stops being dense after adding one edge
VerificationReport demo_nonmonotonicity(int t, const VerifyConfig& cfg = {});

struct ExtremalSearch {
    double best_value = 0.0;
    std::optional<Hypergraph> best_graph;
    bool hit_cap = false;
    long long enumerated = 0;
};

// Enumerate down-set tail extensions of the clique-minus-edges families on a
// t-th vertex and maximize over each; the best value found realizes the
// extremal λ for the given edge count.
ExtremalSearch search_extremal(int s, int t, long long m, long long cap,
                               const VerifyConfig& cfg = {});

}  // namespace laglab
