#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rng.hpp"

namespace laglab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_params(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out << ' ';
        out << k << '=' << v;
        first = false;
    }
    return out.str();
}

// smallest missing-edge count over the (n-1)-vertex induced subgraphs
int min_missing(const Hypergraph& g) {
    int best = std::numeric_limits<int>::max();
    for (int v = 1; v <= g.n(); ++v) {
        int present = 0;
        for (const Edge& e : g.edges())
            if (!std::binary_search(e.begin(), e.end(), v)) ++present;
        best = std::min(best, static_cast<int>(binomial(g.n() - 1, g.r())) - present);
    }
    return best;
}

Hypergraph with_tail(const Hypergraph& base, int t, const std::vector<std::pair<int, int>>& pairs,
                     std::size_t count) {
    std::vector<Edge> edges = base.edges();
    for (std::size_t i = 0; i < count; ++i) edges.push_back({pairs[i].first, pairs[i].second, t});
    return Hypergraph(t, 3, std::move(edges));
}

// tail that excludes the first (all-pairs - k) pairs in colex, so the spare
// capacity sits on low vertices and no large clique can form at the top
Hypergraph with_suffix_tail(const Hypergraph& base, int t, long long k) {
    auto pairs = colex_pairs(t - 1);
    if (k < 0 || k > static_cast<long long>(pairs.size()))
        throw std::logic_error("with_suffix_tail: tail size out of range");
    std::vector<Edge> edges = base.edges();
    for (std::size_t i = pairs.size() - static_cast<std::size_t>(k); i < pairs.size(); ++i)
        edges.push_back({pairs[i].first, pairs[i].second, t});
    return Hypergraph(t, 3, std::move(edges));
}

double lambda_of(const Hypergraph& g, const DensityVerdict& verdict, const OptConfig& opt) {
    if (verdict.lambda) return *verdict.lambda;
    return maximize(g, opt).value;
}

VerifyInstance run_density_instance(const Hypergraph& g, std::string params,
                                    DensityStatus predicted, std::optional<double> lambda_target,
                                    const VerifyConfig& cfg) {
    VerifyInstance inst;
    inst.params = std::move(params);
    inst.predicted = to_string(predicted);
    DensityVerdict verdict = check_dense(g, cfg.density);
    inst.computed = to_string(verdict.status);
    inst.pass = verdict.status == predicted;
    if (verdict.margin) inst.margin = *verdict.margin;
    if (lambda_target) {
        inst.lambda = lambda_of(g, verdict, cfg.density.opt);
        inst.lambda_target = *lambda_target;
        inst.deviation = std::fabs(inst.lambda - inst.lambda_target);
        inst.pass = inst.pass && inst.deviation <= cfg.value_tol;
    } else if (verdict.lambda) {
        inst.lambda = *verdict.lambda;
    }
    return inst;
}

void require(bool ok, const std::string& clause) {
    if (!ok) throw std::invalid_argument("hypothesis violated: " + clause);
}

long long family_lambda_cache_key(int s, int t) { return s * 1000 + t; }

}  // namespace

void VerificationReport::finalize() {
    passed = failed = 0;
    max_deviation = 0.0;
    for (const VerifyInstance& i : instances) {
        (i.pass ? passed : failed)++;
        if (!std::isnan(i.deviation)) max_deviation = std::max(max_deviation, i.deviation);
    }
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["theorem_id"] = theorem_id;
    j["instances"] = nlohmann::json::array();
    for (const VerifyInstance& i : instances) {
        nlohmann::json row;
        row["params"] = i.params;
        row["predicted"] = i.predicted;
        row["computed"] = i.computed;
        row["lambda"] = std::isnan(i.lambda) ? nlohmann::json() : nlohmann::json(i.lambda);
        row["lambda_target"] =
            std::isnan(i.lambda_target) ? nlohmann::json() : nlohmann::json(i.lambda_target);
        row["deviation"] = std::isnan(i.deviation) ? nlohmann::json() : nlohmann::json(i.deviation);
        row["margin"] = std::isnan(i.margin) ? nlohmann::json() : nlohmann::json(i.margin);
        row["pass"] = i.pass;
        j["instances"].push_back(std::move(row));
    }
    j["summary"] = {{"instances", instances.size()},
                    {"passed", passed},
                    {"failed", failed},
                    {"max_deviation", max_deviation},
                    {"wall_seconds", wall_seconds}};
    return j.dump(2);
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "params,predicted,computed,lambda,margin,pass\n";
    out.precision(15);
    for (const VerifyInstance& i : instances) {
        out << '"' << i.params << "\"," << i.predicted << ',' << i.computed << ',';
        if (!std::isnan(i.lambda)) out << i.lambda;
        out << ',';
        if (!std::isnan(i.margin)) out << i.margin;
        out << ',' << (i.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

VerificationReport verify_theorem(const std::string& id, const SweepRange& range,
                                  const VerifyConfig& cfg) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem_id = id == "C3.3" ? "T3.2" : id;

    std::map<long long, double> family_lambda;
    auto lambda_family = [&](int s, int t) {
        long long key = family_lambda_cache_key(s, t);
        auto it = family_lambda.find(key);
        if (it != family_lambda.end()) return it->second;
        FamilySpec spec;
        spec.kind = s == 1   ? FamilyKind::H1
                    : s == 2 ? FamilyKind::H2
                    : s == 3 ? FamilyKind::H3
                             : FamilyKind::H4;
        spec.t = t;
        Hypergraph h = generate(spec);
        double value = orbit_solve(h, family_orbit_classes(s, t), cfg.density.opt).lambda;
        family_lambda[key] = value;
        return value;
    };

    auto m_window = [&](long long def_lo, long long def_hi, const char* clause) {
        long long lo = range.m_lo >= 0 ? range.m_lo : def_lo;
        long long hi = range.m_hi >= 0 ? range.m_hi : def_hi;
        require(lo >= def_lo && hi <= def_hi && lo <= hi, clause);
        return std::make_pair(lo, hi);
    };

    const std::string& tid = report.theorem_id;
    for (int t = range.t_lo; t <= range.t_hi; ++t) {
        const long long c3 = binomial(t - 1, 3);
        const long long cc = c3 + binomial(t - 2, 2);
        if (tid == "T3.1") {
            require(t >= 4, "T3.1 requires t >= 4");
            auto [lo, hi] = m_window(c3, cc, "T3.1 requires C(t-1,3) <= m <= C(t-1,3)+C(t-2,2)");
            double target = complete_lambda(t - 1, 3).to_double();
            for (long long m = lo; m <= hi; ++m) {
                FamilySpec spec;
                spec.kind = FamilyKind::CliqueTail;
                spec.t = t;
                spec.m = m;
                report.instances.push_back(run_density_instance(
                    generate(spec), fmt_params({{"t", t}, {"m", m}}), DensityStatus::NotDense,
                    target, cfg));
            }
        } else if (tid == "T3.2") {
            require(t >= 4, "T3.2 requires t >= 4");
            auto [lo, hi] =
                m_window(cc + 1, binomial(t, 3), "T3.2 requires m >= C(t-1,3)+C(t-2,2)+1");
            for (long long m = lo; m <= hi; ++m) {
                FamilySpec spec;
                spec.kind = FamilyKind::CliqueTail;
                spec.t = t;
                spec.m = m;
                report.instances.push_back(run_density_instance(
                    generate(spec), fmt_params({{"t", t}, {"m", m}}), DensityStatus::Dense,
                    std::nullopt, cfg));
            }
        } else if (tid == "T4.1") {
            require(t >= 5, "T4.1 requires t >= 5");
            auto [lo, hi] = m_window(c3, cc - 3, "T4.1 requires C(t-1,3) <= m <= C(t-1,3)+C(t-2,2)-3");
            FamilySpec spec;
            spec.kind = FamilyKind::H1;
            spec.t = t;
            Hypergraph h1 = generate(spec);
            auto allowed = compressed_tail_pairs(1, t);
            double target = lambda_family(1, t);
            for (long long m = lo; m <= hi; ++m) {
                Hypergraph g = with_tail(h1, t, allowed, static_cast<std::size_t>(m - h1.edge_count()));
                require(min_missing(g) >= 1, "T4.1 instance must not contain a clique of order t-1");
                report.instances.push_back(run_density_instance(
                    g, fmt_params({{"t", t}, {"m", m}}), DensityStatus::NotDense, target, cfg));
            }
        } else if (tid == "T4.5") {
            require(t >= 7, "T4.5 requires t >= 7");
            auto [lo, hi] = m_window(cc, binomial(t, 3) - 2,
                                     "T4.5 requires C(t-1,3)+C(t-2,2) <= m (tail capacity ends at C(t,3)-2)");
            FamilySpec spec;
            spec.kind = FamilyKind::H1;
            spec.t = t;
            Hypergraph h1 = generate(spec);
            for (long long m = lo; m <= hi; ++m) {
                Hypergraph g = with_suffix_tail(h1, t, m - h1.edge_count());
                require(min_missing(g) >= 1, "T4.5 instance must not contain a clique of order t-1");
                report.instances.push_back(run_density_instance(
                    g, fmt_params({{"t", t}, {"m", m}}), DensityStatus::Dense, std::nullopt, cfg));
            }
        } else if (tid == "P4.6a" || tid == "P4.6b") {
            require(t >= 5, tid + " requires t >= 5");
            FamilySpec spec;
            spec.kind = FamilyKind::H1;
            spec.t = t;
            Hypergraph h1 = generate(spec);
            if (tid == "P4.6a") {
                std::vector<std::pair<int, int>> tail;
                for (int i = 2; i < t - 1; ++i)
                    for (int j = i + 1; j <= t - 1; ++j) tail.emplace_back(i, j);
                Hypergraph g = with_tail(h1, t, tail, tail.size());
                VerifyInstance inst = run_density_instance(
                    g, fmt_params({{"t", t}, {"m", g.edge_count()}}), DensityStatus::NotDense,
                    std::nullopt, cfg);
                // the not-dense certificate must be the exact uncovered pair {1, t}
                DensityVerdict verdict = check_dense(g, cfg.density);
                inst.pass = inst.pass && verdict.certificate == CertificateKind::CoverPairFailure &&
                            verdict.uncovered_pair == std::make_pair(1, t);
                report.instances.push_back(std::move(inst));
            } else {
                const std::size_t k = static_cast<std::size_t>(binomial(t - 2, 2));
                // variant 0: no critical tail edge (compressed tail)
                Hypergraph g0 = with_tail(h1, t, compressed_tail_pairs(1, t), k);
                // variant 1: exactly one critical tail edge, remaining pairs
                // chosen so every vertex still reaches the tail vertex
                std::vector<std::pair<int, int>> one;
                one.emplace_back(t - 3, t - 2);
                for (int b = t - 1; b >= t - 3 && one.size() < k; --b)
                    for (int i = 1; i <= t - 4 && one.size() < k; ++i) one.emplace_back(i, b);
                for (int j = 2; j <= t - 4 && one.size() < k; ++j)
                    for (int i = 1; i < j && one.size() < k; ++i) one.emplace_back(i, j);
                Hypergraph g1 = with_tail(h1, t, one, one.size());
                for (int variant = 0; variant < 2; ++variant) {
                    const Hypergraph& g = variant == 0 ? g0 : g1;
                    require(!check_cover_pairs(g).has_value(), "P4.6b instance must cover all pairs");
                    report.instances.push_back(run_density_instance(
                        g, fmt_params({{"t", t}, {"m", g.edge_count()}, {"critical", variant}}),
                        DensityStatus::Dense, std::nullopt, cfg));
                }
            }
        } else if (tid == "T5.1") {
            require(t >= 12, "T5.1 requires t >= 12");
            auto [lo, hi] = m_window(c3, cc - 6, "T5.1 requires C(t-1,3) <= m <= C(t-1,3)+C(t-2,2)-6");
            for (int s = 2; s <= 4; ++s) {
                FamilySpec spec;
                spec.kind = s == 2 ? FamilyKind::H2 : s == 3 ? FamilyKind::H3 : FamilyKind::H4;
                spec.t = t;
                Hypergraph hs = generate(spec);
                auto pairs = s == 2 ? compressed_tail_pairs(2, t) : colex_pairs(t - 1);
                double target = lambda_family(s, t);
                for (long long m = lo; m <= hi; ++m) {
                    Hypergraph g = with_tail(hs, t, pairs, static_cast<std::size_t>(m - hs.edge_count()));
                    require(min_missing(g) >= 2,
                            "T5.1 instance must not contain a clique of order t-1 minus one edge");
                    report.instances.push_back(run_density_instance(
                        g, fmt_params({{"t", t}, {"m", m}, {"s", s}}), DensityStatus::NotDense,
                        target, cfg));
                }
            }
        } else if (tid == "T5.2") {
            require(t >= 9, "T5.2 requires t >= 9");
            auto [lo, hi] = m_window(cc - 1, binomial(t, 3) - 4,
                                     "T5.2 requires C(t-1,3)+C(t-2,2)-1 <= m (tail capacity ends at C(t,3)-4)");
            for (int s = 2; s <= 4; ++s) {
                FamilySpec spec;
                spec.kind = s == 2 ? FamilyKind::H2 : s == 3 ? FamilyKind::H3 : FamilyKind::H4;
                spec.t = t;
                Hypergraph hs = generate(spec);
                for (long long m = lo; m <= hi; ++m) {
                    Hypergraph g = with_suffix_tail(hs, t, m - hs.edge_count());
                    require(min_missing(g) >= 2,
                            "T5.2 instance must not contain a clique of order t-1 minus one edge");
                    report.instances.push_back(run_density_instance(
                        g, fmt_params({{"t", t}, {"m", m}, {"s", s}}), DensityStatus::Dense,
                        std::nullopt, cfg));
                }
            }
        } else {
            throw std::invalid_argument(
                "unknown theorem id '" + id +
                "'; valid: T3.1, T3.2, C3.3, T4.1, T4.5, P4.6a, P4.6b, T5.1, T5.2");
        }
    }
    report.finalize();
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport probe_conjecture61(int r, int t, const SweepRange& m_range,
                                      const VerifyConfig& cfg) {
    auto start = Clock::now();
    require(r >= 3, "C6.1 requires r >= 3");
    require(t >= r + 1, "C6.1 requires t >= r+1");
    VerificationReport report;
    report.theorem_id = "C6.1";

    const long long def_lo = binomial(t - 1, r);
    const long long def_hi = def_lo + binomial(t - 2, r - 1);
    long long lo = m_range.m_lo >= 0 ? m_range.m_lo : def_lo;
    long long hi = m_range.m_hi >= 0 ? m_range.m_hi : def_hi;
    require(lo >= def_lo && hi <= def_hi && lo <= hi,
            "C6.1 requires C(t-1,r) <= m <= C(t-1,r)+C(t-2,r-1)");

    // all (r-1)-subsets of [t-1], colex order
    std::vector<Edge> slots;
    Edge cur(r - 1);
    auto rec = [&](auto&& self, int pos, int lo_v) -> void {
        if (pos == r - 1) {
            slots.push_back(cur);
            return;
        }
        for (int v = lo_v; v <= t - 1 - (r - 1 - pos - 1); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    std::sort(slots.begin(), slots.end(), colex_less);

    const double base = complete_lambda(t - 1, r).to_double();
    FamilySpec clique_spec;
    clique_spec.kind = FamilyKind::Complete;
    clique_spec.t = t - 1;
    clique_spec.r = r;
    std::vector<Edge> clique_edges = generate(clique_spec).edges();

    SplitMix64 rng = stream_for(cfg.density.opt.seed, 0xC61);
    for (long long m = lo; m <= hi; ++m) {
        const long long k = m - def_lo;
        const int variants = k == 0 ? 1 : 1 + std::max(0, cfg.samples);
        for (int variant = 0; variant < variants; ++variant) {
            std::vector<std::size_t> pick(slots.size());
            std::iota(pick.begin(), pick.end(), 0);
            if (variant > 0) {  // random tail; variant 0 is the colex prefix
                for (std::size_t i = 0; i < pick.size(); ++i) {
                    std::size_t j = i + rng.next_below(pick.size() - i);
                    std::swap(pick[i], pick[j]);
                }
            }
            std::vector<Edge> edges = clique_edges;
            for (long long i = 0; i < k; ++i) {
                Edge e = slots[pick[static_cast<std::size_t>(i)]];
                e.push_back(t);
                edges.push_back(std::move(e));
            }
            Hypergraph g(t, r, std::move(edges));
            double lam = maximize(g, cfg.density.opt).value;
            VerifyInstance inst;
            inst.params = fmt_params({{"r", r}, {"t", t}, {"m", m}, {"variant", variant}});
            inst.lambda = lam;
            inst.lambda_target = base;
            inst.deviation = lam - base;  // signed margin above the clique value
            bool flagged = inst.deviation > cfg.value_tol;
            inst.predicted = "Margin<=tol";
            inst.computed = flagged ? "Flagged" : "Margin<=tol";
            inst.pass = r == 3 ? !flagged : true;
            report.instances.push_back(std::move(inst));
        }
    }
    report.finalize();
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport demo_nonheredity(int t, const VerifyConfig& cfg) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem_id = "R2.4";
    FamilySpec spec;
    spec.kind = FamilyKind::Remark24;
    spec.t = t;
    Hypergraph g = generate(spec);
    report.instances.push_back(run_density_instance(g, fmt_params({{"t", t}, {"m", g.edge_count()}}),
                                                    DensityStatus::Dense, std::nullopt, cfg));
    Hypergraph sub = induced(g, {t - 3, t - 2, t - 1, t});
    VerifyInstance inst = run_density_instance(sub, fmt_params({{"t", t}, {"induced_on", 4}}),
                                               DensityStatus::NotDense, std::nullopt, cfg);
    DensityVerdict verdict = check_dense(sub, cfg.density);
    inst.pass = inst.pass && verdict.certificate == CertificateKind::CoverPairFailure &&
                verdict.uncovered_pair == std::make_pair(3, 4);
    report.instances.push_back(std::move(inst));
    report.finalize();
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport demo_nonmonotonicity(int t, const VerifyConfig& cfg) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem_id = "R6.2";
    FamilySpec spec;
    spec.kind = FamilyKind::Remark62;
    spec.t = t;
    Hypergraph g = generate(spec);
    report.instances.push_back(run_density_instance(g, fmt_params({{"t", t}, {"m", g.edge_count()}}),
                                                    DensityStatus::Dense, std::nullopt, cfg));
    std::vector<Edge> edges = g.edges();
    edges.push_back({t - 3, t - 2, t - 1});
    Hypergraph h(t, 3, std::move(edges));
    report.instances.push_back(run_density_instance(h, fmt_params({{"t", t}, {"m", h.edge_count()}}),
                                                    DensityStatus::NotDense, std::nullopt, cfg));
    report.finalize();
    report.wall_seconds = seconds_since(start);
    return report;
}

ExtremalSearch search_extremal(int s, int t, long long m, long long cap, const VerifyConfig& cfg) {
    require(s >= 1 && s <= 4, "search_extremal requires s in 1..4");
    FamilySpec spec;
    spec.kind = s == 1   ? FamilyKind::H1
                : s == 2 ? FamilyKind::H2
                : s == 3 ? FamilyKind::H3
                         : FamilyKind::H4;
    spec.t = t;
    Hypergraph base = generate(spec);
    const long long k = m - base.edge_count();
    require(k >= 0, "search_extremal requires m >= the family's edge count");

    // poset universe: tail pairs in colex; for s=1,2 restricted to the pairs
    // that keep the extension left-compressed
    auto universe = (s <= 2) ? compressed_tail_pairs(s, t) : colex_pairs(t - 1);
    const int P = static_cast<int>(universe.size());
    require(k <= P, "search_extremal: m exceeds the tail capacity");

    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < P; ++i) index[universe[i]] = i;
    // immediate ancestors of each pair inside the universe
    std::vector<std::vector<int>> parents(P);
    for (int i = 0; i < P; ++i) {
        auto [a, b] = universe[i];
        for (auto q : {std::make_pair(a - 1, b), std::make_pair(a, b - 1)}) {
            if (q.first < 1 || q.second <= q.first) continue;
            auto it = index.find(q);
            if (it != index.end()) parents[i].push_back(it->second);
        }
    }

    ExtremalSearch result;
    std::vector<char> chosen(P, 0);
    std::vector<int> picked;
    const int need_missing = s == 1 ? 1 : 2;

    auto emit = [&]() {
        ++result.enumerated;
        std::vector<std::pair<int, int>> tail;
        for (int i : picked) tail.push_back(universe[i]);
        Hypergraph g = with_tail(base, t, tail, tail.size());
        if (min_missing(g) < need_missing) return;  // violates the clique exclusion
        double lam = maximize(g, cfg.density.opt).value;
        if (!result.best_graph || lam > result.best_value) {
            result.best_value = lam;
            result.best_graph = g;
        }
    };

    // down-sets as colex-increasing sequences whose ancestors are all chosen
    auto dfs = [&](auto&& self, int from, long long remaining) -> void {
        if (result.enumerated >= cap) {
            result.hit_cap = true;
            return;
        }
        if (remaining == 0) {
            emit();
            return;
        }
        for (int i = from; i <= P - static_cast<int>(remaining); ++i) {
            bool ok = true;
            for (int p : parents[i])
                if (!chosen[p]) ok = false;
            if (!ok) continue;
            chosen[i] = 1;
            picked.push_back(i);
            self(self, i + 1, remaining - 1);
            picked.pop_back();
            chosen[i] = 0;
            if (result.hit_cap) return;
        }
    };
    dfs(dfs, 0, k);
    if (!result.best_graph) {
        result.best_value = maximize(base, cfg.density.opt).value;
        result.best_graph = base;
    }
    return result;
}

}  // namespace laglab
