#include "laglab/laglab.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "density.hpp"
#include "families.hpp"
#include "hypergraph.hpp"
#include "lagrangian.hpp"
#include "verify.hpp"

struct laglab_graph {
    laglab::Hypergraph g;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
laglab_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const laglab::BudgetExceeded& ex) {
        set_error(ex.what());
        return LAGLAB_ERR_BUDGET;
    } catch (const std::invalid_argument& ex) {
        set_error(ex.what());
        return LAGLAB_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& ex) {
        set_error(ex.what());
        return LAGLAB_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return LAGLAB_ERR_INTERNAL;
    }
}

laglab::OptConfig opt_config(const laglab_config* cfg) {
    laglab::OptConfig opt;
    if (!cfg) return opt;
    opt.seed = cfg->seed;
    opt.starts = cfg->starts;
    opt.iter_cap = cfg->iter_cap;
    opt.kkt_tol = cfg->kkt_tol;
    opt.value_tie_tol = cfg->value_tie_tol;
    opt.threads = cfg->threads;
    return opt;
}

laglab::DensityConfig density_config(const laglab_config* cfg) {
    laglab::DensityConfig dc;
    dc.opt = opt_config(cfg);
    if (cfg) dc.delta = cfg->delta;
    return dc;
}

laglab::VerifyConfig verify_config(const laglab_config* cfg, int samples) {
    laglab::VerifyConfig vc;
    vc.density = density_config(cfg);
    if (cfg) vc.value_tol = cfg->value_tol;
    if (samples > 0) vc.samples = samples;
    return vc;
}

laglab_status require_arg(bool ok, const char* msg) {
    if (ok) return LAGLAB_OK;
    set_error(msg);
    return LAGLAB_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* laglab_version(void) { return "1.0.0"; }

const char* laglab_error_message(void) { return g_last_error.c_str(); }

void laglab_string_free(char* s) { delete[] s; }

void laglab_config_init(laglab_config* cfg) {
    if (!cfg) return;
    laglab::OptConfig opt;
    laglab::DensityConfig dc;
    laglab::VerifyConfig vc;
    cfg->seed = opt.seed;
    cfg->starts = opt.starts;
    cfg->iter_cap = opt.iter_cap;
    cfg->kkt_tol = opt.kkt_tol;
    cfg->value_tie_tol = opt.value_tie_tol;
    cfg->delta = dc.delta;
    cfg->value_tol = vc.value_tol;
    cfg->threads = opt.threads;
}

laglab_status laglab_graph_from_family(const char* spec, laglab_graph** out) {
    if (auto st = require_arg(spec && out, "spec and out must be non-null")) return st;
    return guarded([&] {
        laglab::FamilySpec fs = laglab::parse_family_spec(spec);
        *out = new laglab_graph{laglab::generate(fs)};
        return LAGLAB_OK;
    });
}

laglab_status laglab_graph_from_edgelist(const char* text, laglab_graph** out) {
    if (auto st = require_arg(text && out, "text and out must be non-null")) return st;
    return guarded([&]() -> laglab_status {
        try {
            *out = new laglab_graph{laglab::parse_edge_list(std::string(text))};
        } catch (const std::invalid_argument& ex) {
            set_error(ex.what());
            return LAGLAB_ERR_PARSE;
        }
        return LAGLAB_OK;
    });
}

laglab_status laglab_graph_from_file(const char* path, laglab_graph** out) {
    if (auto st = require_arg(path && out, "path and out must be non-null")) return st;
    return guarded([&]() -> laglab_status {
        std::ifstream in(path);
        if (!in) {
            set_error(std::string("cannot open '") + path + "'");
            return LAGLAB_ERR_IO;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return laglab_graph_from_edgelist(buf.str().c_str(), out);
    });
}

void laglab_graph_free(laglab_graph* g) { delete g; }

int laglab_graph_vertex_count(const laglab_graph* g) { return g ? g->g.n() : 0; }
int laglab_graph_edge_size(const laglab_graph* g) { return g ? g->g.r() : 0; }
int laglab_graph_edge_count(const laglab_graph* g) { return g ? g->g.edge_count() : 0; }

laglab_status laglab_graph_to_edgelist(const laglab_graph* g, char** out_text) {
    if (auto st = require_arg(g && out_text, "g and out_text must be non-null")) return st;
    return guarded([&] {
        *out_text = dup_string(laglab::to_edge_list(g->g));
        return LAGLAB_OK;
    });
}

laglab_status laglab_maximize(const laglab_graph* g, const laglab_config* cfg,
                              laglab_opt_result* out, double* weights, size_t weights_len) {
    if (auto st = require_arg(g && out, "g and out must be non-null")) return st;
    if (weights && static_cast<int>(weights_len) < g->g.n())
        return require_arg(false, "weights buffer too small");
    return guarded([&] {
        laglab::OptimizationResult res = laglab::maximize(g->g, opt_config(cfg));
        out->value = res.value;
        out->stationarity_residual = res.stationarity_residual;
        out->converged = res.converged ? 1 : 0;
        out->iterations = static_cast<int>(res.iterations);
        out->starts_used = res.starts_used;
        out->support_size = static_cast<int>(res.support.size());
        if (weights)
            for (int i = 0; i < g->g.n(); ++i) weights[i] = res.weighting[i];
        return LAGLAB_OK;
    });
}

laglab_status laglab_evaluate(const laglab_graph* g, const double* weights, size_t len,
                              double* out_value) {
    if (auto st = require_arg(g && weights && out_value, "g, weights, out_value must be non-null"))
        return st;
    return guarded([&] {
        laglab::Weighting x(weights, weights + len);
        *out_value = laglab::evaluate(g->g, x);
        return LAGLAB_OK;
    });
}

laglab_status laglab_density_json(const laglab_graph* g, const laglab_config* cfg,
                                  char** out_json) {
    if (auto st = require_arg(g && out_json, "g and out_json must be non-null")) return st;
    return guarded([&] {
        laglab::DensityVerdict v = laglab::check_dense(g->g, density_config(cfg));
        *out_json = dup_string(v.to_json());
        return LAGLAB_OK;
    });
}

laglab_status laglab_density_status(const laglab_graph* g, const laglab_config* cfg,
                                    laglab_verdict* out_status) {
    if (auto st = require_arg(g && out_status, "g and out_status must be non-null")) return st;
    return guarded([&] {
        laglab::DensityVerdict v = laglab::check_dense(g->g, density_config(cfg));
        switch (v.status) {
            case laglab::DensityStatus::Dense: *out_status = LAGLAB_DENSE; break;
            case laglab::DensityStatus::NotDense: *out_status = LAGLAB_NOT_DENSE; break;
            default: *out_status = LAGLAB_INCONCLUSIVE; break;
        }
        return LAGLAB_OK;
    });
}

laglab_status laglab_verify_json(const char* theorem_id, int t_lo, int t_hi, long long m_lo,
                                 long long m_hi, int r, int samples, const laglab_config* cfg,
                                 char** out_json, int* out_all_pass) {
    if (auto st = require_arg(theorem_id && out_json, "theorem_id and out_json must be non-null"))
        return st;
    return guarded([&] {
        laglab::VerifyConfig vc = verify_config(cfg, samples);
        laglab::SweepRange range;
        range.t_lo = t_lo;
        range.t_hi = t_hi;
        range.m_lo = m_lo;
        range.m_hi = m_hi;
        std::string id(theorem_id);
        laglab::VerificationReport report;
        if (id == "C6.1") {
            if (t_lo != t_hi)
                throw std::invalid_argument("C6.1 probes a single t; pass t_lo == t_hi");
            report = laglab::probe_conjecture61(r > 0 ? r : 3, t_lo, range, vc);
        } else if (id == "R2.4" || id == "R6.2") {
            for (int t = t_lo; t <= t_hi; ++t) {
                laglab::VerificationReport part = id == "R2.4" ? laglab::demo_nonheredity(t, vc)
                                                               : laglab::demo_nonmonotonicity(t, vc);
                report.theorem_id = part.theorem_id;
                for (auto& inst : part.instances) report.instances.push_back(std::move(inst));
                report.wall_seconds += part.wall_seconds;
            }
            report.finalize();
        } else {
            report = laglab::verify_theorem(id, range, vc);
        }
        *out_json = dup_string(report.to_json());
        if (out_all_pass) *out_all_pass = report.all_pass() ? 1 : 0;
        return LAGLAB_OK;
    });
}

laglab_status laglab_report_csv(const char* report_json, char** out_csv) {
    if (auto st = require_arg(report_json && out_csv, "report_json and out_csv must be non-null"))
        return st;
    return guarded([&]() -> laglab_status {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(report_json);
        } catch (const nlohmann::json::parse_error& ex) {
            set_error(ex.what());
            return LAGLAB_ERR_PARSE;
        }
        std::ostringstream out;
        out << "params,predicted,computed,lambda,margin,pass\n";
        out.precision(15);
        for (const auto& row : j.at("instances")) {
            out << '"' << row.at("params").get<std::string>() << "\","
                << row.at("predicted").get<std::string>() << ','
                << row.at("computed").get<std::string>() << ',';
            if (row.contains("lambda") && !row["lambda"].is_null())
                out << row["lambda"].get<double>();
            out << ',';
            if (row.contains("margin") && !row["margin"].is_null())
                out << row["margin"].get<double>();
            out << ',' << (row.at("pass").get<bool>() ? "true" : "false") << '\n';
        }
        *out_csv = dup_string(out.str());
        return LAGLAB_OK;
    });
}

}  // extern "C"
