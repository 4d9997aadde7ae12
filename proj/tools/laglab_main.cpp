// Command-line front end. Talks to the core exclusively through the C API.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "laglab/laglab.h"

namespace {

constexpr int kExitError = 4;  // usage / input errors; distinct from verdict codes

[[noreturn]] void fail(const std::string& msg) {
    std::cerr << "laglab: " << msg << "\n";
    std::exit(kExitError);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct GraphHandle {
    laglab_graph* g = nullptr;
    ~GraphHandle() { laglab_graph_free(g); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { laglab_string_free(s); }
};

void load_graph(const std::string& family, const std::string& file, GraphHandle& out) {
    laglab_status st;
    if (!family.empty() && !file.empty()) fail("--family and --file are mutually exclusive");
    if (!family.empty())
        st = laglab_graph_from_family(family.c_str(), &out.g);
    else if (!file.empty())
        st = laglab_graph_from_file(file.c_str(), &out.g);
    else
        fail("one of --family or --file is required");
    if (st != LAGLAB_OK) fail(laglab_error_message());
}

void emit_graph(const laglab_graph* g, const std::string& path) {
    if (path.empty()) return;
    StringHandle text;
    if (laglab_graph_to_edgelist(g, &text.s) != LAGLAB_OK) fail(laglab_error_message());
    std::ofstream out(path);
    if (!out) fail("cannot write '" + path + "'");
    out << text.s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) fail("cannot write '" + path + "'");
    out << content;
}

// group equal consecutive weights for a compact witness echo
std::string group_weights(const std::vector<double>& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j + 1 < w.size() && std::fabs(w[j + 1] - w[i]) <= 1e-9) ++j;
        if (!out.empty()) out += ", ";
        out += fmt(w[i]);
        if (j > i) out += " x" + std::to_string(j - i + 1);
        i = j + 1;
    }
    return out;
}

bool parse_range(const std::string& text, long long& lo, long long& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangians, density certificates, and threshold-rule sweeps for uniform hypergraphs"};
    app.require_subcommand(1);

    laglab_config cfg;
    laglab_config_init(&cfg);
    std::string family, file, emit, output = "table";

    auto add_common = [&](CLI::App* cmd, bool input) {
        if (input) {
            cmd->add_option("--family", family, "generated family, e.g. complete:4:3 or H1:7");
            cmd->add_option("--file", file, "edge-list file ('n r' header, one edge per line)");
            cmd->add_option("--emit", emit, "write the input graph as an edge list to this path");
        }
        cmd->add_option("--seed", cfg.seed, "base RNG seed")->envname("LAGLAB_SEED");
        cmd->add_option("--starts", cfg.starts, "multistart count");
        cmd->add_option("--iter-cap", cfg.iter_cap, "ascent iteration cap per start");
        cmd->add_option("--kkt-tol", cfg.kkt_tol, "stationarity tolerance");
        cmd->add_option("--delta", cfg.delta, "density margin");
        cmd->add_option("--value-tol", cfg.value_tol, "lambda-equality tolerance in reports");
        cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
            ->envname("LAGLAB_THREADS");
        cmd->add_option("--output", output, "table | json (verify also: csv)")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* lag = app.add_subcommand("lagrangian", "maximize the graph Lagrangian");
    add_common(lag, true);

    auto* den = app.add_subcommand("density", "decide density (exit 0 dense, 1 not, 3 inconclusive)");
    add_common(den, true);

    auto* ver = app.add_subcommand("verify", "sweep a threshold rule and compare verdicts");
    std::string theorem, t_range, m_range;
    int probe_r = 0, samples = 0;
    std::string report_json_path, report_csv_path;
    bool no_report = false;
    ver->add_option("theorem", theorem,
                    "rule id: T3.1, T3.2, C3.3, T4.1, T4.5, P4.6a, P4.6b, T5.1, T5.2, C6.1, R2.4, R6.2")
        ->required();
    ver->add_option("--t", t_range, "t range, e.g. 5..8 or 7")->required();
    ver->add_option("--m", m_range, "edge-count range override, e.g. 20..27");
    ver->add_option("--r", probe_r, "edge size for the C6.1 probe");
    ver->add_option("--samples", samples, "random tails per edge count (C6.1)");
    ver->add_option("--report-json", report_json_path, "report JSON path");
    ver->add_option("--report-csv", report_csv_path, "report CSV path");
    ver->add_flag("--no-report", no_report, "skip writing report files");
    add_common(ver, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    if ((lag->parsed() || den->parsed()) && output == "csv")
        fail("csv output applies to the verify subcommand");

    if (lag->parsed()) {
        GraphHandle g;
        load_graph(family, file, g);
        emit_graph(g.g, emit);
        laglab_opt_result res;
        std::vector<double> weights(static_cast<std::size_t>(laglab_graph_vertex_count(g.g)));
        if (laglab_maximize(g.g, &cfg, &res, weights.data(), weights.size()) != LAGLAB_OK)
            fail(laglab_error_message());
        std::vector<int> support;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (weights[i] > 1e-10) support.push_back(static_cast<int>(i) + 1);
        if (output == "json") {
            nlohmann::json j;
            j["lambda"] = res.value;
            j["residual"] = res.stationarity_residual;
            j["converged"] = res.converged != 0;
            j["iterations"] = res.iterations;
            j["starts"] = res.starts_used;
            j["support"] = support;
            j["weights"] = weights;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "lambda = " << fmt(res.value) << "\n";
            std::cout << "residual = " << fmt(res.stationarity_residual) << "\n";
            std::cout << "converged = " << (res.converged ? "yes" : "no") << "\n";
            std::cout << "support = " << support.size() << " of " << weights.size() << "\n";
            std::cout << "weights = " << group_weights(weights) << "\n";
        }
        return res.converged ? 0 : 2;
    }

    if (den->parsed()) {
        GraphHandle g;
        load_graph(family, file, g);
        emit_graph(g.g, emit);
        StringHandle json;
        if (laglab_density_json(g.g, &cfg, &json.s) != LAGLAB_OK) fail(laglab_error_message());
        if (output == "json") {
            std::cout << json.s << "\n";
        } else {
            auto j = nlohmann::json::parse(json.s);
            std::cout << "status = " << j["status"].get<std::string>() << "\n";
            std::cout << "certificate = " << j["certificate_kind"].get<std::string>() << "\n";
            if (!j["certificate_data"].empty())
                std::cout << "certificate_data = " << j["certificate_data"].dump() << "\n";
            if (!j["lambda"].is_null()) std::cout << "lambda = " << fmt(j["lambda"].get<double>()) << "\n";
            if (!j["margin"].is_null()) std::cout << "margin = " << fmt(j["margin"].get<double>()) << "\n";
            if (j.contains("theorem_id"))
                std::cout << "theorem = " << j["theorem_id"].get<std::string>() << "\n";
        }
        std::string status = nlohmann::json::parse(json.s)["status"].get<std::string>();
        if (status == "Dense") return 0;
        if (status == "NotDense") return 1;
        return 3;
    }

    // verify
    long long t_lo = 0, t_hi = 0, m_lo = -1, m_hi = -1;
    if (!parse_range(t_range, t_lo, t_hi)) fail("--t expects N or LO..HI");
    if (!m_range.empty() && !parse_range(m_range, m_lo, m_hi)) fail("--m expects N or LO..HI");
    StringHandle json;
    int all_pass = 0;
    if (laglab_verify_json(theorem.c_str(), static_cast<int>(t_lo), static_cast<int>(t_hi), m_lo,
                           m_hi, probe_r, samples, &cfg, &json.s, &all_pass) != LAGLAB_OK)
        fail(laglab_error_message());
    auto j = nlohmann::json::parse(json.s);
    if (output == "json") {
        std::cout << json.s << "\n";
    } else if (output == "csv") {
        StringHandle csv_out;
        if (laglab_report_csv(json.s, &csv_out.s) != LAGLAB_OK) fail(laglab_error_message());
        std::cout << csv_out.s;
    } else {
        for (const auto& row : j["instances"]) {
            if (row["pass"].get<bool>()) continue;
            std::cout << "FAIL " << row["params"].get<std::string>() << ": predicted "
                      << row["predicted"].get<std::string>() << ", computed "
                      << row["computed"].get<std::string>();
            if (!row["deviation"].is_null())
                std::cout << ", deviation " << fmt(row["deviation"].get<double>());
            std::cout << "\n";
        }
        const auto& s = j["summary"];
        std::cout << j["theorem_id"].get<std::string>() << ": " << s["passed"].get<int>() << "/"
                  << (s["passed"].get<int>() + s["failed"].get<int>()) << " pass, max deviation "
                  << fmt(s["max_deviation"].get<double>()) << ", " << fmt(s["wall_seconds"].get<double>())
                  << " s\n";
    }
    if (!no_report) {
        std::string id = j["theorem_id"].get<std::string>();
        for (char& c : id)
            if (c == '.') c = '_';
        std::string jp = report_json_path.empty() ? "laglab_report_" + id + ".json" : report_json_path;
        std::string cp = report_csv_path.empty() ? "laglab_report_" + id + ".csv" : report_csv_path;
        write_file(jp, json.s);
        StringHandle csv;
        if (laglab_report_csv(json.s, &csv.s) != LAGLAB_OK) fail(laglab_error_message());
        write_file(cp, csv.s);
    }
    return all_pass ? 0 : 1;
}
