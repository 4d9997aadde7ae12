#include "lagrangian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "clique.hpp"
#include "rng.hpp"

namespace laglab {

double evaluate(const Hypergraph& g, const Weighting& x) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("evaluate: weighting has wrong dimension");
    double total = 0.0;
    for (const Edge& e : g.edges()) {
        double prod = 1.0;
        for (int v : e) prod *= x[v - 1];
        total += prod;
    }
    return total;
}

double partial(const Hypergraph& g, const Weighting& x, int i) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("partial: weighting has wrong dimension");
    if (i < 1 || i > g.n()) throw std::invalid_argument("partial: vertex out of range");
    double total = 0.0;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        double prod = 1.0;
        for (int v : e)
            if (v != i) prod *= x[v - 1];
        total += prod;
    }
    return total;
}

std::vector<int> support_of(const Weighting& x, double zero_threshold) {
    std::vector<int> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > zero_threshold) s.push_back(static_cast<int>(i) + 1);
    return s;
}

namespace {

// Multilinear-by-position objective over the standard simplex: a list of
// degree-homogeneous monomials with nonnegative coefficients. Vertex
// Lagrangians use coefficient 1 and one monomial per edge; orbit reductions
// use class variables with repeated positions.
struct MonomialObjective {
    int nvars = 0;
    int degree = 0;
    std::vector<double> coefs;
    std::vector<int> vars;  // degree entries per monomial, 0-based

    int count() const { return static_cast<int>(coefs.size()); }

    double eval(const std::vector<double>& x) const {
        double total = 0.0;
        const int* v = vars.data();
        for (int m = 0; m < count(); ++m, v += degree) {
            double prod = coefs[m];
            for (int p = 0; p < degree; ++p) prod *= x[v[p]];
            total += prod;
        }
        return total;
    }

    void grad(const std::vector<double>& x, std::vector<double>& g) const {
        g.assign(nvars, 0.0);
        const int* v = vars.data();
        double pre[8], suf[8];
        for (int m = 0; m < count(); ++m, v += degree) {
            pre[0] = 1.0;
            for (int p = 0; p < degree - 1; ++p) pre[p + 1] = pre[p] * x[v[p]];
            suf[degree - 1] = 1.0;
            for (int p = degree - 1; p > 0; --p) suf[p - 1] = suf[p] * x[v[p]];
            for (int p = 0; p < degree; ++p) g[v[p]] += coefs[m] * pre[p] * suf[p];
        }
    }

    void hessian(const std::vector<double>& x, std::vector<double>& h) const {
        h.assign(static_cast<std::size_t>(nvars) * nvars, 0.0);
        const int* v = vars.data();
        for (int m = 0; m < count(); ++m, v += degree) {
            for (int p = 0; p < degree; ++p) {
                for (int q = 0; q < degree; ++q) {
                    if (p == q) continue;
                    double prod = coefs[m];
                    for (int o = 0; o < degree; ++o)
                        if (o != p && o != q) prod *= x[v[o]];
                    h[static_cast<std::size_t>(v[p]) * nvars + v[q]] += prod;
                }
            }
        }
    }
};

MonomialObjective objective_for(const Hypergraph& g) {
    MonomialObjective obj;
    obj.nvars = g.n();
    obj.degree = g.r();
    obj.coefs.assign(g.edge_count(), 1.0);
    obj.vars.reserve(static_cast<std::size_t>(g.edge_count()) * g.r());
    for (const Edge& e : g.edges())
        for (int v : e) obj.vars.push_back(v - 1);
    return obj;
}

double residual_of(const MonomialObjective& obj, const std::vector<double>& x,
                   std::vector<double>& g, double zero_threshold) {
    obj.grad(x, g);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < obj.nvars; ++i) {
        if (x[i] <= zero_threshold) continue;
        lo = std::min(lo, g[i]);
        hi = std::max(hi, g[i]);
    }
    return hi > lo ? hi - lo : 0.0;
}

void project_to_simplex(std::vector<double>& x) {
    std::vector<double> u(x);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double acc = 0.0, theta = 0.0;
    int rho = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += u[i];
        double t = (acc - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            rho = static_cast<int>(i + 1);
            theta = t;
        }
    }
    if (rho == 0) {  // degenerate input; fall back to uniform
        std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(x.size()));
        return;
    }
    double sum = 0.0;
    for (double& v : x) {
        v = std::max(0.0, v - theta);
        sum += v;
    }
    for (double& v : x) v /= sum;
}

// Solve a dense linear system in place by Gaussian elimination with partial
// pivoting. Returns false when effectively singular.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::fabs(a[row * n + col]) > std::fabs(a[piv * n + col])) piv = row;
        if (std::fabs(a[piv * n + col]) < 1e-14) return false;
        if (piv != col) {
            for (int k = col; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
            std::swap(b[piv], b[col]);
        }
        for (int row = col + 1; row < n; ++row) {
            double f = a[row * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) a[row * n + k] -= f * a[col * n + k];
            b[row] -= f * b[col];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double acc = b[row];
        for (int k = row + 1; k < n; ++k) acc -= a[row * n + k] * b[k];
        b[row] = acc / a[row * n + row];
    }
    return true;
}

// Equalize partial derivatives on the current support by Newton steps on the
// stationarity system; steps are damped to stay in the simplex. A step is
// accepted when the value does not drop, or when it is value-equal up to
// evaluation rounding while cutting the stationarity residual sharply (near
// the optimum the objective is flat to machine precision but the residual is
// not). Coordinates may land exactly on zero, which shrinks the support for
// the next round.
bool newton_polish(const MonomialObjective& obj, std::vector<double>& x, double& val,
                   double zero_threshold) {
    bool improved = false;
    std::vector<double> g, h, mat, rhs;
    int full_steps = 0;
    for (int round = 0; round < 12; ++round) {
        std::vector<int> s;
        for (int i = 0; i < obj.nvars; ++i)
            if (x[i] > zero_threshold) s.push_back(i);
        const int k = static_cast<int>(s.size());
        if (k < 2) break;
        double res_before = residual_of(obj, x, g, zero_threshold);
        obj.hessian(x, h);
        const int dim = k + 1;
        double scale = 0.0;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                scale = std::max(scale, std::fabs(h[static_cast<std::size_t>(s[a]) * obj.nvars + s[b]]));
        // flat directions (twin vertices) make the plain system singular;
        // retry with an escalating ridge
        bool solved = false;
        for (double ridge : {0.0, 1e-10 * scale, 1e-6 * scale, 1e-3 * scale}) {
            mat.assign(static_cast<std::size_t>(dim) * dim, 0.0);
            rhs.assign(dim, 0.0);
            for (int a = 0; a < k; ++a) {
                for (int b = 0; b < k; ++b)
                    mat[a * dim + b] = h[static_cast<std::size_t>(s[a]) * obj.nvars + s[b]];
                mat[a * dim + a] += ridge;
                mat[a * dim + k] = -1.0;
                mat[k * dim + a] = 1.0;
                rhs[a] = -g[s[a]];
            }
            if (solve_dense(mat, rhs, dim)) {
                solved = true;
                break;
            }
        }
        if (!solved) break;
        double alpha = 1.0;
        for (int a = 0; a < k; ++a)
            if (rhs[a] < 0 && x[s[a]] + rhs[a] < 0) alpha = std::min(alpha, x[s[a]] / -rhs[a]);
        std::vector<double> cand(x);
        for (int a = 0; a < k; ++a) cand[s[a]] = std::max(0.0, x[s[a]] + alpha * rhs[a]);
        double sum = std::accumulate(cand.begin(), cand.end(), 0.0);
        if (sum <= 0) break;
        for (double& v : cand) v /= sum;
        double cv = obj.eval(cand);
        bool flat_but_sharper = false;
        if (cv < val) {
            if (cv >= val - 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, val)) {
                std::vector<double> gc;
                flat_but_sharper = residual_of(obj, cand, gc, zero_threshold) < 0.5 * res_before;
            }
            if (!flat_but_sharper) break;
        }
        bool moved = cv > val || flat_but_sharper || cand != x;
        x = std::move(cand);
        val = obj.eval(x);
        if (moved) improved = true;
        if (alpha >= 1.0) {
            if (++full_steps >= 3) break;  // quadratic convergence has done its job
        } else {
            full_steps = 0;
        }
    }
    return improved;
}

bool projected_gradient_step(const MonomialObjective& obj, std::vector<double>& x, double& val,
                             const std::vector<double>& g) {
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::fabs(v));
    if (gmax <= 0) return false;
    double step = 0.5 / gmax;
    for (int halving = 0; halving < 24; ++halving, step *= 0.5) {
        std::vector<double> y(x);
        for (int i = 0; i < obj.nvars; ++i) y[i] += step * g[i];
        project_to_simplex(y);
        double vy = obj.eval(y);
        if (vy > val) {
            x = std::move(y);
            val = vy;
            return true;
        }
    }
    return false;
}

struct AscentOutcome {
    std::vector<double> x;
    double value = 0.0;
    double residual = 0.0;
    long long iterations = 0;
    bool converged = false;
};

AscentOutcome ascend(const MonomialObjective& obj, std::vector<double> x, const OptConfig& cfg,
                     std::vector<double>* trace) {
    AscentOutcome out;
    double val = obj.eval(x);
    if (trace) trace->push_back(val);
    std::vector<double> g(obj.nvars, 0.0);
    long long iter = 0;
    for (; iter < cfg.iter_cap; ++iter) {
        double residual = residual_of(obj, x, g, cfg.zero_threshold);
        if (residual <= cfg.kkt_tol) {
            out.converged = true;
            break;
        }
        if (cfg.polish_every > 0 && (iter + 1) % cfg.polish_every == 0) {
            if (newton_polish(obj, x, val, cfg.zero_threshold)) continue;
            if (projected_gradient_step(obj, x, val, g)) continue;
        }
        if (val <= 0) break;  // start missed every monomial; nothing to grow
        double dot = 0.0;
        for (int i = 0; i < obj.nvars; ++i) dot += x[i] * g[i];
        if (dot <= 0) break;
        std::vector<double> next(obj.nvars);
        double sum = 0.0;
        for (int i = 0; i < obj.nvars; ++i) {
            next[i] = x[i] * g[i] / dot;
            sum += next[i];
        }
        for (double& v : next) v /= sum;
        double nval = obj.eval(next);
        if (nval < val) {
            // growth has hit its floating-point floor; hand over to the
            // polish steps and stop only if they cannot move either
            if (newton_polish(obj, x, val, cfg.zero_threshold) ||
                projected_gradient_step(obj, x, val, g))
                continue;
            break;
        }
        x = std::move(next);
        val = nval;
        if (trace) trace->push_back(val);
    }
    out.iterations = iter;
    out.residual = residual_of(obj, x, g, cfg.zero_threshold);
    out.converged = out.residual <= cfg.kkt_tol;
    out.value = obj.eval(x);
    out.x = std::move(x);
    return out;
}

std::vector<double> make_start(int idx, int n, bool descending_hint, std::uint64_t seed) {
    std::vector<double> x(n, 1.0 / n);
    if (n == 1) return x;
    SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(idx));
    int cursor = 0;
    if (idx == cursor++) return x;  // uniform
    if (descending_hint) {
        if (idx == cursor) {
            // perturbed uniform sorted descending, matching the weight order
            // a left-compressed optimum must have
            std::vector<double> eps(n);
            for (double& e : eps) e = rng.next_unit() * (0.5 / n);
            std::sort(eps.begin(), eps.end(), std::greater<double>());
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                x[i] = 1.0 / n + eps[i];
                sum += x[i];
            }
            for (double& v : x) v /= sum;
            return x;
        }
        ++cursor;
    }
    if (idx < cursor + n) {
        int v = idx - cursor;
        const double eta = 0.3;
        for (int i = 0; i < n; ++i) x[i] = eta / n;
        x[v] += 1.0 - eta;
        return x;
    }
    double sum = 0.0;
    for (double& v : x) {
        v = rng.next_exponential();
        sum += v;
    }
    for (double& v : x) v /= sum;
    return x;
}

OptimizationResult empty_result(const Hypergraph& g) {
    OptimizationResult res;
    res.value = 0.0;
    res.weighting.assign(g.n(), 1.0 / g.n());
    res.support = {};
    res.stationarity_residual = 0.0;
    res.converged = true;
    return res;
}

OptimizationResult run_multistart(const MonomialObjective& obj, const OptConfig& cfg,
                                  bool descending_hint) {
    const int starts = std::max(1, cfg.starts);
    std::vector<AscentOutcome> outcomes(starts);
    auto run_one = [&](int i) {
        outcomes[i] = ascend(obj, make_start(i, obj.nvars, descending_hint, cfg.seed), cfg, nullptr);
    };
    int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, starts));
    if (threads == 1) {
        for (int i = 0; i < starts; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < starts; i = next.fetch_add(1)) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    int best = 0;
    long long total_iter = 0;
    for (int i = 0; i < starts; ++i) {
        total_iter += outcomes[i].iterations;
        if (outcomes[i].value > outcomes[best].value) best = i;
    }
    OptimizationResult res;
    res.value = outcomes[best].value;
    res.weighting = std::move(outcomes[best].x);
    res.support = support_of(res.weighting, cfg.zero_threshold);
    res.stationarity_residual = outcomes[best].residual;
    res.starts_used = starts;
    res.iterations = total_iter;
    res.converged = outcomes[best].converged;
    return res;
}

}  // namespace

OptimizationResult ascend_from(const Hypergraph& g, Weighting start, const OptConfig& cfg,
                               std::vector<double>* trace) {
    if (static_cast<int>(start.size()) != g.n())
        throw std::invalid_argument("ascend_from: start has wrong dimension");
    if (g.edge_count() == 0) return empty_result(g);
    MonomialObjective obj = objective_for(g);
    AscentOutcome out = ascend(obj, std::move(start), cfg, trace);
    OptimizationResult res;
    res.value = out.value;
    res.weighting = std::move(out.x);
    res.support = support_of(res.weighting, cfg.zero_threshold);
    res.stationarity_residual = out.residual;
    res.starts_used = 1;
    res.iterations = out.iterations;
    res.converged = out.converged;
    return res;
}

OptimizationResult maximize(const Hypergraph& g, const OptConfig& cfg) {
    if (g.edge_count() == 0) return empty_result(g);
    MonomialObjective obj = objective_for(g);
    bool hint = is_left_compressed(g).left_compressed;
    return run_multistart(obj, cfg, hint);
}

OptimizationResult maximize_on_support(const Hypergraph& g, const std::vector<int>& s,
                                       const OptConfig& cfg) {
    if (s.empty()) throw std::invalid_argument("maximize_on_support: empty support");
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    Hypergraph sub = induced(g, sorted);
    OptimizationResult inner = maximize(sub, cfg);
    OptimizationResult res;
    res.value = inner.value;
    res.weighting.assign(g.n(), 0.0);
    for (std::size_t j = 0; j < sorted.size(); ++j) res.weighting[sorted[j] - 1] = inner.weighting[j];
    res.support = support_of(res.weighting, cfg.zero_threshold);
    res.stationarity_residual = inner.stationarity_residual;
    res.starts_used = inner.starts_used;
    res.iterations = inner.iterations;
    res.converged = inner.converged;
    return res;
}

OptimizationResult minimal_support_optimum(const Hypergraph& g, const OptConfig& cfg) {
    OptimizationResult best = maximize(g, cfg);
    std::vector<int> support = best.support;
    bool improved = true;
    while (improved && support.size() > 1) {
        improved = false;
        for (int v : support) {
            std::vector<int> smaller;
            for (int u : support)
                if (u != v) smaller.push_back(u);
            OptimizationResult cand = maximize_on_support(g, smaller, cfg);
            if (cand.value >= best.value - cfg.value_tie_tol) {
                best = std::move(cand);
                support = best.support;
                improved = true;
                break;
            }
        }
    }
    return best;
}

Rational complete_lambda(int t, int r) {
    if (t < 1 || r < 1) throw std::invalid_argument("complete_lambda: t and r must be positive");
    if (r > t) return Rational(0);
    return Rational(binomial(t, r), ipow(t, r));
}

Rational motzkin_straus_value(const Hypergraph& g, int clique_cap) {
    int omega = clique_number(g, clique_cap);
    return Rational(omega - 1, 2LL * omega);
}

SymmetricSolution orbit_solve(const Hypergraph& g, const std::vector<std::vector<int>>& classes,
                              const OptConfig& cfg) {
    std::vector<int> class_of(g.n() + 1, -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) throw std::invalid_argument("orbit_solve: empty class");
        for (int v : classes[c]) {
            if (v < 1 || v > g.n() || class_of[v] != -1)
                throw std::invalid_argument("orbit_solve: partition does not cover 1..n exactly once");
            class_of[v] = static_cast<int>(c);
        }
    }
    for (int v = 1; v <= g.n(); ++v)
        if (class_of[v] < 0)
            throw std::invalid_argument("orbit_solve: partition does not cover 1..n exactly once");

    const int p = static_cast<int>(classes.size());
    SymmetricSolution sol;
    sol.class_weights.assign(p, 0.0);
    if (g.edge_count() == 0) {
        for (int c = 0; c < p; ++c)
            sol.class_weights[c] = 1.0 / g.n();
        return sol;
    }

    MonomialObjective obj;
    obj.nvars = p;
    obj.degree = g.r();
    for (const Edge& e : g.edges()) {
        double coef = 1.0;
        std::vector<int> ids;
        for (int v : e) {
            coef /= static_cast<double>(classes[class_of[v]].size());
            ids.push_back(class_of[v]);
        }
        std::sort(ids.begin(), ids.end());
        obj.coefs.push_back(coef);
        obj.vars.insert(obj.vars.end(), ids.begin(), ids.end());
    }

    OptimizationResult res = run_multistart(obj, cfg, false);
    for (int c = 0; c < p; ++c)
        sol.class_weights[c] = res.weighting[c] / static_cast<double>(classes[c].size());
    sol.lambda = res.value;
    sol.residual = res.stationarity_residual;
    return sol;
}

TwoClassSolution h1_closed_form(int t) {
    if (t < 5) throw std::invalid_argument("h1_closed_form: requires t >= 5");
    const double tm1 = static_cast<double>(t - 1);
    TwoClassSolution sol;
    sol.a = (tm1 - std::sqrt(tm1 * tm1 - 12.0)) / 6.0;
    sol.b = sol.a - sol.a * sol.a;
    const double a = sol.a, b = sol.b;
    sol.lambda = static_cast<double>(binomial(t - 4, 3)) * a * a * a +
                 3.0 * static_cast<double>(binomial(t - 4, 2)) * a * a * b +
                 3.0 * static_cast<double>(t - 4) * a * b * b;
    return sol;
}

Rational evaluate_on_grid(const Hypergraph& g, const std::vector<long long>& numerators, long long d) {
    if (static_cast<int>(numerators.size()) != g.n())
        throw std::invalid_argument("evaluate_on_grid: wrong dimension");
    long long sum = 0;
    for (long long k : numerators) {
        if (k < 0) throw std::invalid_argument("evaluate_on_grid: negative numerator");
        sum += k;
    }
    if (sum != d) throw std::invalid_argument("evaluate_on_grid: numerators must sum to the resolution");
    __int128 acc = 0;
    for (const Edge& e : g.edges()) {
        __int128 prod = 1;
        for (int v : e) prod *= numerators[v - 1];
        acc += prod;
    }
    if (acc > INT64_MAX) throw std::overflow_error("evaluate_on_grid: value overflow");
    return Rational(static_cast<long long>(acc), ipow(d, g.r()));
}

Rational grid_oracle(const Hypergraph& g, int resolution, long long budget) {
    if (resolution < 1) throw std::invalid_argument("grid_oracle: resolution must be >= 1");
    long long points = -1;
    try {
        points = binomial(g.n() + resolution - 1, g.n() - 1);
    } catch (const std::overflow_error&) {
    }
    if (points < 0 || points > budget)
        throw BudgetExceeded("grid_oracle: grid of " +
                             (points < 0 ? std::string("> 2^63") : std::to_string(points)) +
                             " points exceeds the budget of " + std::to_string(budget));

    const int n = g.n();
    const long long d = resolution;
    std::vector<long long> parts(n, 0);
    long long best = 0;
    auto rec = [&](auto&& self, int idx, long long remaining) -> void {
        if (idx == n - 1) {
            parts[idx] = remaining;
            long long total = 0;
            for (const Edge& e : g.edges()) {
                long long prod = 1;
                for (int v : e) {
                    prod *= parts[v - 1];
                    if (prod == 0) break;
                }
                total += prod;
            }
            if (total > best) best = total;
            return;
        }
        for (long long k = 0; k <= remaining; ++k) {
            parts[idx] = k;
            self(self, idx + 1, remaining - k);
        }
    };
    rec(rec, 0, d);
    return Rational(best, ipow(d, g.r()));
}

}  // namespace laglab
