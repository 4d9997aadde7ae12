#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypergraph.hpp"
#include "rational.hpp"

namespace laglab {

// thrown when an exhaustive computation would exceed its configured budget
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// legal weighting: nonnegative, sums to 1
using Weighting = std::vector<double>;

struct OptConfig {
    std::uint64_t seed = 0x5EED;
    int starts = 64;
    int iter_cap = 10000;
    double kkt_tol = 1e-9;        // stationarity residual target on the support
    double value_tie_tol = 1e-9;  // values closer than this count as ties
    double zero_threshold = 1e-10;
    int threads = 0;  // 0 = hardware concurrency
    int polish_every = 25;
};

struct OptimizationResult {
    double value = 0.0;
    Weighting weighting;
    std::vector<int> support;  // 1-based, ascending
    double stationarity_residual = 0.0;
    int starts_used = 0;
    long long iterations = 0;  // summed over starts
    bool converged = false;
};

double evaluate(const Hypergraph& g, const Weighting& x);

// partial derivative at vertex i; equals the link Lagrangian λ(E_i, x)
double partial(const Hypergraph& g, const Weighting& x, int i);

std::vector<int> support_of(const Weighting& x, double zero_threshold = 1e-10);

// Multistart monotone ascent (growth transform interleaved with projected
// gradient and Newton-on-support polish). The returned value is always the
// exact evaluation of the returned weighting, hence a certified lower bound.
OptimizationResult maximize(const Hypergraph& g, const OptConfig& cfg = {});

// Single trajectory from a given start. When trace is given it records the
// value before the first step and after every growth-transform step (polish
// steps are not traced), so it is non-decreasing by construction.
OptimizationResult ascend_from(const Hypergraph& g, Weighting start, const OptConfig& cfg,
                               std::vector<double>* trace = nullptr);

// maximize with weights outside s pinned to zero, embedded back into n coords
OptimizationResult maximize_on_support(const Hypergraph& g, const std::vector<int>& s,
                                       const OptConfig& cfg = {});

// Among supports attaining the best known value (within value_tie_tol),
// greedily shrink to one of minimal cardinality.
OptimizationResult minimal_support_optimum(const Hypergraph& g, const OptConfig& cfg = {});

// λ(K_t^{(r)}) = C(t,r)/t^r, exact
Rational complete_lambda(int t, int r);

// exact 2-graph value ½(1 - 1/ω) via branch-and-bound clique number
Rational motzkin_straus_value(const Hypergraph& g, int clique_cap = 64);

// weights constant on each class; class_weights are per-vertex values
struct SymmetricSolution {
    std::vector<double> class_weights;
    double lambda = 0.0;
    double residual = 0.0;  // stationarity residual of the reduced system
};

// Maximize λ restricted to class-constant weightings. The partition must
// cover 1..n exactly once; classes are trusted to be exchangeable.
SymmetricSolution orbit_solve(const Hypergraph& g, const std::vector<std::vector<int>>& classes,
                              const OptConfig& cfg = {});

// two-class solution of the clique-minus-one-edge family: a is the smaller
// root of 3a² - (t-1)a + 1 = 0 and b = a - a²
struct TwoClassSolution {
    double a = 0.0;
    double b = 0.0;
    double lambda = 0.0;
};
TwoClassSolution h1_closed_form(int t);

// exhaustive max over the rational grid {k/d} of the simplex; exact lower
// bound on λ(G); refuses when the grid has more than `budget` points
Rational grid_oracle(const Hypergraph& g, int resolution, long long budget = 20'000'000);

// exact λ(G, k/d) for integer numerators summing to d
Rational evaluate_on_grid(const Hypergraph& g, const std::vector<long long>& numerators, long long d);

}  // namespace laglab
