// cyclefit command-line tool: graph construction, certification, coloring
// verification, witness building, regularity checks and arrowing decisions,
// with reproducible JSON reports.

#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclefit/arrows.hpp"
#include "cyclefit/coloring.hpp"
#include "cyclefit/cycles.hpp"
#include "cyclefit/fit.hpp"
#include "cyclefit/graph_io.hpp"
#include "cyclefit/regularity.hpp"
#include "cyclefit/version.hpp"
#include "cyclefit/witness.hpp"

using json = nlohmann::ordered_json;
using namespace cyclefit;

namespace {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1; // false / violation / counterexample / failed
constexpr int kExitUnknown = 2;  // unknown / budget / sampled-only
constexpr int kExitInputError = 3;

struct Session {
    std::string report_path; // empty = stdout
    bool deterministic = false;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    json report;
    int exit_code = kExitOk;
    bool finished = false;

    void finish(json r, int code) {
        report = std::move(r);
        exit_code = code;
        finished = true;
    }

    int emit() {
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        report["timings"] = {{"wall_seconds", deterministic ? 0.0 : wall}};
        std::string text = report.dump(2);
        text.push_back('\n');
        if (report_path.empty())
            std::fputs(text.c_str(), stdout);
        else
            write_text_file(report_path, text);
        return exit_code;
    }
};

json make_report(const std::string& command, json config) {
    json report;
    report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = command;
    report["config"] = std::move(config);
    report["status"] = "";
    report["results"] = json::object();
    return report;
}

json cycle_to_json(const CycleWitness& w) {
    return json{{"length", w.length()}, {"vertices", w.vertices}};
}

json vertex_set_to_json(const VertexSet& s) {
    return json(s.to_indices());
}

json rational_to_json(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}};
}

json condition_to_json(const ConditionReport& c) {
    return json{{"status", to_string(c.status)},
                {"threshold", c.threshold},
                {"worst_deviation", c.worst_deviation},
                {"slack", c.slack},
                {"witness", c.witness}};
}

json certificate_to_json(const FitCertificate& cert) {
    json j;
    j["n"] = cert.n;
    j["seed"] = cert.seed;
    j["retries_used"] = cert.retries_used;
    j["conditions"] = {{"A", condition_to_json(cert.count_condition)},
                       {"B", condition_to_json(cert.degree_condition)},
                       {"C", condition_to_json(cert.codegree_condition)},
                       {"D", condition_to_json(cert.discrepancy_condition)}};
    j["spectral"] = {{"estimate", cert.spectral.spectral_norm_estimate},
                     {"certified_bound", cert.spectral.certified_bound},
                     {"residual", cert.spectral.residual},
                     {"iterations", cert.spectral.iterations}};
    j["sampled_pairs"] = cert.sampled_pairs;
    j["repair"] = {{"trim_count", cert.repair.trim_count},
                   {"switch_count", cert.repair.switch_count},
                   {"max_trim_touch", cert.repair.max_trim_touch},
                   {"max_touch", cert.repair.max_touch},
                   {"trim_touch_alert", cert.repair.trim_touch_alert}};
    return j;
}

int certificate_exit_code(const FitCertificate& cert) {
    if (cert.any_failed())
        return kExitNegative;
    return cert.all_proven() ? kExitOk : kExitUnknown;
}

json spectrum_result_to_json(const SpectrumBuildResult& res) {
    json cycles = json::array();
    for (const auto& [len, witness] : res.cycles)
        cycles.push_back(cycle_to_json(witness));
    json gaps = json::array();
    for (const auto& gap : res.gaps)
        gaps.push_back(json{{"length", gap.length}, {"reason", gap.reason}});
    return json{{"cycles", cycles}, {"gaps", gaps}};
}

// Vertex set syntax: comma-separated ids and inclusive ranges, e.g. "0-28,58".
VertexSet parse_vertex_set(const std::string& text, int universe) {
    VertexSet out(universe);
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        size_t dash = token.find('-');
        try {
            if (dash == std::string::npos) {
                out.insert(std::stoi(token));
            } else {
                int lo = std::stoi(token.substr(0, dash));
                int hi = std::stoi(token.substr(dash + 1));
                if (lo > hi)
                    throw InputError("vertex range '" + token + "' is reversed");
                for (int v = lo; v <= hi; ++v)
                    out.insert(v);
            }
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse vertex set token '" + token + "'");
        } catch (const std::out_of_range&) {
            throw InputError("vertex set token '" + token + "' is out of range");
        }
    }
    if (out.count() == 0)
        throw InputError("vertex set '" + text + "' is empty");
    return out;
}

struct GraphInput {
    std::string path;
    std::string format = "auto";

    Graph load() const { return load_graph(path, format); }
};

void add_graph_input(CLI::App* cmd, GraphInput& input) {
    cmd->add_option("--in", input.path, "input graph file (graph6 or edge list)")->required();
    cmd->add_option("--format", input.format, "input format: g6, edges or auto")
        ->check(CLI::IsMember({"g6", "edges", "auto"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudorandom cycle-Ramsey graphs: construction, certification and arrowing"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    auto session = std::make_shared<Session>();
    app.add_option("--report", session->report_path,
                   "write the JSON report here instead of stdout");

    // ---------------------------------------------------------------- fit
    CLI::App* fit = app.add_subcommand("fit", "build and certify n-fit graphs");
    fit->require_subcommand(1);

    {
        CLI::App* build = fit->add_subcommand("build", "sample, repair and certify a fit graph");
        auto n = std::make_shared<int>(0);
        auto seed = std::make_shared<uint64_t>(0);
        auto retries = std::make_shared<int>(3);
        auto multiplier = std::make_shared<double>(1.0);
        auto pairs = std::make_shared<long long>(10000);
        auto out_path = std::make_shared<std::string>();
        auto cert_path = std::make_shared<std::string>();
        auto deterministic = std::make_shared<bool>(false);
        build->add_option("--n", *n, "fit parameter n (graph has 2n-1 vertices)")->required();
        build->add_option("--seed", *seed, "base seed; retries use seed+1, seed+2, ...");
        build->add_option("--retries", *retries, "additional attempts after the first");
        build->add_option("--tol-multiplier", *multiplier, "threshold multiplier");
        build->add_option("--sample-pairs", *pairs, "set pairs sampled per discrepancy check");
        build->add_option("--out", *out_path, "write the graph here (graph6)")->required();
        build->add_option("--cert", *cert_path, "write the certificate JSON here");
        build->add_flag("--deterministic", *deterministic, "zero timings in the report");
        build->callback([=]() {
            session->deterministic = *deterministic;
            json config{{"n", *n},          {"seed", *seed},
                        {"retries", *retries}, {"tol_multiplier", *multiplier},
                        {"sample_pairs", *pairs}, {"out", *out_path},
                        {"cert", *cert_path}, {"deterministic", *deterministic}};
            json report = make_report("fit build", config);
            ToleranceProfile tol;
            tol.multiplier = *multiplier;
            FitBuildOptions opts;
            opts.max_retries = *retries;
            opts.sampling.pairs = *pairs;
            opts.certify.sample_pairs = *pairs;
            FitBuildResult result = build_fit_graph(*n, *seed, tol, opts);
            report["status"] = result.success ? "built" : "build-failed";
            report["results"]["success"] = result.success;
            report["results"]["accepted_seed"] = result.accepted_seed;
            if (!result.failure_reason.empty())
                report["results"]["failure_reason"] = result.failure_reason;
            if (result.graph.vertex_count() > 0) {
                save_graph(result.graph, *out_path, "g6");
                report["results"]["graph_file"] = *out_path;
                report["results"]["graph6"] = to_graph6(result.graph);
            }
            json cert = certificate_to_json(result.certificate);
            report["results"]["certificate"] = cert;
            if (!cert_path->empty()) {
                std::string text = cert.dump(2);
                text.push_back('\n');
                write_text_file(*cert_path, text);
            }
            session->finish(std::move(report),
                            result.success ? certificate_exit_code(result.certificate)
                                           : kExitNegative);
        });
    }

    {
        CLI::App* certify = fit->add_subcommand("certify", "certify an existing graph");
        auto input = std::make_shared<GraphInput>();
        auto n = std::make_shared<int>(0);
        auto multiplier = std::make_shared<double>(1.0);
        auto seed = std::make_shared<uint64_t>(0);
        auto pairs = std::make_shared<long long>(10000);
        auto cert_path = std::make_shared<std::string>();
        auto deterministic = std::make_shared<bool>(false);
        add_graph_input(certify, *input);
        certify->add_option("--n", *n, "fit parameter n")->required();
        certify->add_option("--tol-multiplier", *multiplier, "threshold multiplier");
        certify->add_option("--seed", *seed, "seed for sampled condition (D)");
        certify->add_option("--sample-pairs", *pairs, "set pairs sampled for condition (D)");
        certify->add_option("--cert", *cert_path, "write the certificate JSON here");
        certify->add_flag("--deterministic", *deterministic, "zero timings in the report");
        certify->callback([=]() {
            session->deterministic = *deterministic;
            json config{{"in", input->path},  {"format", input->format},
                        {"n", *n},            {"tol_multiplier", *multiplier},
                        {"seed", *seed},      {"sample_pairs", *pairs},
                        {"cert", *cert_path}, {"deterministic", *deterministic}};
            json report = make_report("fit certify", config);
            Graph g = input->load();
            ToleranceProfile tol;
            tol.multiplier = *multiplier;
            CertifyOptions opts;
            opts.sample_pairs = *pairs;
            opts.seed = *seed;
            FitCertificate cert = certify_fit(g, *n, tol, opts);
            json cert_json = certificate_to_json(cert);
            report["status"] = cert.all_proven()   ? "proven"
                               : cert.any_failed() ? "failed"
                                                   : "sampled-consistent";
            report["results"]["certificate"] = cert_json;
            if (!cert_path->empty()) {
                std::string text = cert_json.dump(2);
                text.push_back('\n');
                write_text_file(*cert_path, text);
            }
            session->finish(std::move(report), certificate_exit_code(cert));
        });
    }

    // ---------------------------------------------------------------- color
    CLI::App* color = app.add_subcommand("color", "extremal colorings and avoidance checks");
    color->require_subcommand(1);

    {
        CLI::App* extremal = color->add_subcommand(
            "extremal", "lower-bound coloring around a low-degree vertex");
        auto input = std::make_shared<GraphInput>();
        auto n = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        add_graph_input(extremal, *input);
        extremal->add_option("--n", *n, "target red cycle length n")->required();
        extremal->add_option("--out", *out_path, "write the coloring file here");
        extremal->callback([=]() {
            json config{{"in", input->path}, {"format", input->format}, {"n", *n},
                        {"out", *out_path}};
            json report = make_report("color extremal", config);
            Graph g = input->load();
            auto res = color_extremal_lower_bound(g, *n);
            if (!res) {
                report["status"] = "inapplicable";
                report["results"]["reason"] = "minimum degree exceeds n";
                session->finish(std::move(report), kExitNegative);
                return;
            }
            report["status"] = "colored";
            report["results"]["pivot"] = res->pivot;
            report["results"]["side_prime"] = vertex_set_to_json(res->side_prime);
            if (!out_path->empty())
                write_text_file(*out_path, to_coloring_file(res->coloring));
            else
                report["results"]["coloring"] = to_coloring_file(res->coloring);
            session->finish(std::move(report), kExitOk);
        });
    }

    {
        CLI::App* blocking =
            color->add_subcommand("blocking", "two-halves blocking coloring of K_{2n-2}");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto out_graph = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        blocking->add_option("--n", *n, "red cycle length n")->required();
        blocking->add_option("--k", *k, "odd blue cycle length k")->required();
        blocking->add_option("--out-graph", *out_graph, "write K_{2n-2} here (graph6)");
        blocking->add_option("--out", *out_path, "write the coloring file here");
        blocking->callback([=]() {
            json config{{"n", *n}, {"k", *k}, {"out_graph", *out_graph}, {"out", *out_path}};
            json report = make_report("color blocking", config);
            BlockingColoring res = color_bipartite_blocking(*n, *k);
            report["status"] = "colored";
            report["results"]["vertices"] = res.graph.vertex_count();
            report["results"]["graph6"] = to_graph6(res.graph);
            if (!out_graph->empty())
                save_graph(res.graph, *out_graph, "g6");
            if (!out_path->empty())
                write_text_file(*out_path, to_coloring_file(res.coloring));
            else
                report["results"]["coloring"] = to_coloring_file(res.coloring);
            session->finish(std::move(report), kExitOk);
        });
    }

    {
        CLI::App* verify =
            color->add_subcommand("verify", "check a coloring against forbidden cycles");
        auto input = std::make_shared<GraphInput>();
        auto coloring_path = std::make_shared<std::string>();
        auto red = std::make_shared<int>(0);
        auto blue = std::make_shared<int>(0);
        auto blue_all_odd = std::make_shared<bool>(false);
        auto budget = std::make_shared<uint64_t>(SearchLimits{}.node_cap);
        add_graph_input(verify, *input);
        verify->add_option("--coloring", *coloring_path, "coloring file")->required();
        verify->add_option("--red", *red, "forbidden red cycle length")->required();
        auto* blue_opt = verify->add_option("--blue", *blue, "forbidden odd blue cycle length");
        verify->add_flag("--blue-all-odd", *blue_all_odd, "forbid every odd blue cycle")
            ->excludes(blue_opt);
        verify->add_option("--budget-nodes", *budget, "node cap per exact search");
        verify->callback([=]() {
            json config{{"in", input->path},           {"format", input->format},
                        {"coloring", *coloring_path},  {"red", *red},
                        {"blue", *blue},               {"blue_all_odd", *blue_all_odd},
                        {"budget_nodes", *budget}};
            json report = make_report("color verify", config);
            Graph g = input->load();
            EdgeColoring coloring = from_coloring_file(g, read_text_file(*coloring_path));
            AvoidanceSpec spec = *blue_all_odd ? AvoidanceSpec::red_and_all_blue_odd(*red)
                                               : AvoidanceSpec::red_and_single_blue(*red, *blue);
            AvoidanceVerdict verdict = verify_avoidance(g, coloring, spec, SearchLimits{*budget});
            report["status"] = verdict.clean ? "clean" : "violation";
            report["results"]["clean"] = verdict.clean;
            if (verdict.violation) {
                report["results"]["violation_color"] =
                    std::string(1, color_char(verdict.violation->first));
                report["results"]["violation_cycle"] = cycle_to_json(verdict.violation->second);
            }
            session->finish(std::move(report), verdict.clean ? kExitOk : kExitNegative);
        });
    }

    // -------------------------------------------------------------- witness
    CLI::App* witness = app.add_subcommand("witness", "constructive monochromatic cycle spectra");
    witness->require_subcommand(1);

    {
        CLI::App* blue =
            witness->add_subcommand("blue-spectrum", "blue cycles of every length via a hub");
        auto input = std::make_shared<GraphInput>();
        auto coloring_path = std::make_shared<std::string>();
        auto v1 = std::make_shared<std::string>();
        auto v2 = std::make_shared<std::string>();
        auto hub = std::make_shared<int>(-1);
        auto multiplier = std::make_shared<double>(1.0);
        add_graph_input(blue, *input);
        blue->add_option("--coloring", *coloring_path, "coloring file")->required();
        blue->add_option("--v1", *v1, "side V1, e.g. 0-58")->required();
        blue->add_option("--v2", *v2, "side V2, e.g. 59-117")->required();
        blue->add_option("--hub", *hub, "hub vertex with blue neighbors on both sides")
            ->required();
        blue->add_option("--thr-multiplier", *multiplier, "threshold multiplier");
        blue->callback([=]() {
            json config{{"in", input->path},          {"format", input->format},
                        {"coloring", *coloring_path}, {"v1", *v1},
                        {"v2", *v2},                  {"hub", *hub},
                        {"thr_multiplier", *multiplier}};
            json report = make_report("witness blue-spectrum", config);
            Graph g = input->load();
            EdgeColoring coloring = from_coloring_file(g, read_text_file(*coloring_path));
            SideThresholds thr;
            thr.multiplier = *multiplier;
            SpectrumBuildResult res = build_blue_spectrum(
                g, coloring, parse_vertex_set(*v1, g.vertex_count()),
                parse_vertex_set(*v2, g.vertex_count()), *hub, thr);
            report["status"] = res.gaps.empty() ? "complete" : "gaps";
            report["results"] = spectrum_result_to_json(res);
            session->finish(std::move(report), res.gaps.empty() ? kExitOk : kExitNegative);
        });
    }

    {
        CLI::App* red =
            witness->add_subcommand("red-pancyclic", "red cycles of every length inside W_i");
        auto input = std::make_shared<GraphInput>();
        auto coloring_path = std::make_shared<std::string>();
        auto wi = std::make_shared<std::string>();
        auto vi = std::make_shared<std::string>();
        auto multiplier = std::make_shared<double>(1.0);
        auto external = std::make_shared<int>(-1);
        add_graph_input(red, *input);
        red->add_option("--coloring", *coloring_path, "coloring file")->required();
        red->add_option("--wi", *wi, "the classified set W_i")->required();
        red->add_option("--vi", *vi, "the side V_i")->required();
        red->add_option("--thr-multiplier", *multiplier, "threshold multiplier");
        red->add_option("--external", *external,
                        "optional outside vertex for the |W_i|+1 cycle");
        red->callback([=]() {
            json config{{"in", input->path},          {"format", input->format},
                        {"coloring", *coloring_path}, {"wi", *wi},
                        {"vi", *vi},                  {"thr_multiplier", *multiplier},
                        {"external", *external}};
            json report = make_report("witness red-pancyclic", config);
            Graph g = input->load();
            EdgeColoring coloring = from_coloring_file(g, read_text_file(*coloring_path));
            SideThresholds thr;
            thr.multiplier = *multiplier;
            PancyclicOptions opts;
            if (*external >= 0)
                opts.external_vertex = *external;
            SpectrumBuildResult res = build_red_pancyclic(
                g, coloring, parse_vertex_set(*wi, g.vertex_count()),
                parse_vertex_set(*vi, g.vertex_count()), thr, opts);
            report["status"] = res.gaps.empty() ? "complete" : "gaps";
            report["results"] = spectrum_result_to_json(res);
            session->finish(std::move(report), res.gaps.empty() ? kExitOk : kExitNegative);
        });
    }

    // ------------------------------------------------------------------ reg
    CLI::App* reg = app.add_subcommand("reg", "density, regular pairs, reduced graphs, M_t");
    reg->require_subcommand(1);

    {
        CLI::App* density = reg->add_subcommand("density", "exact pair density");
        auto input = std::make_shared<GraphInput>();
        auto v1 = std::make_shared<std::string>();
        auto v2 = std::make_shared<std::string>();
        add_graph_input(density, *input);
        density->add_option("--v1", *v1, "first side")->required();
        density->add_option("--v2", *v2, "second side")->required();
        density->callback([=]() {
            json config{{"in", input->path}, {"format", input->format}, {"v1", *v1},
                        {"v2", *v2}};
            json report = make_report("reg density", config);
            Graph g = input->load();
            Rational d = pair_density(g, parse_vertex_set(*v1, g.vertex_count()),
                                      parse_vertex_set(*v2, g.vertex_count()));
            report["status"] = "ok";
            report["results"]["density"] = rational_to_json(d);
            report["results"]["density_double"] = d.to_double();
            session->finish(std::move(report), kExitOk);
        });
    }

    {
        CLI::App* pair = reg->add_subcommand("pair", "epsilon-regularity verdict for a pair");
        auto input = std::make_shared<GraphInput>();
        auto v1 = std::make_shared<std::string>();
        auto v2 = std::make_shared<std::string>();
        auto eps = std::make_shared<double>(0.25);
        auto mode = std::make_shared<std::string>("exhaustive");
        auto samples = std::make_shared<long long>(10000);
        auto seed = std::make_shared<uint64_t>(0);
        add_graph_input(pair, *input);
        pair->add_option("--v1", *v1, "first side")->required();
        pair->add_option("--v2", *v2, "second side")->required();
        pair->add_option("--eps", *eps, "epsilon")->required();
        pair->add_option("--mode", *mode, "exhaustive or sampled")
            ->check(CLI::IsMember({"exhaustive", "sampled"}));
        pair->add_option("--samples", *samples, "sample count (sampled mode)");
        pair->add_option("--seed", *seed, "seed (sampled mode)");
        pair->callback([=]() {
            json config{{"in", input->path},   {"format", input->format},
                        {"v1", *v1},           {"v2", *v2},
                        {"eps", *eps},         {"mode", *mode},
                        {"samples", *samples}, {"seed", *seed}};
            json report = make_report("reg pair", config);
            Graph g = input->load();
            RegularityMode m;
            m.exhaustive = *mode == "exhaustive";
            m.samples = *samples;
            m.seed = *seed;
            RegularityVerdict v =
                check_regular_pair(g, parse_vertex_set(*v1, g.vertex_count()),
                                   parse_vertex_set(*v2, g.vertex_count()), *eps, m);
            const char* kind = v.kind == RegularityKind::Regular ? "regular"
                               : v.kind == RegularityKind::HeuristicRegular
                                   ? "heuristic-regular"
                                   : "irregular";
            report["status"] = kind;
            report["results"]["max_deviation"] = v.max_deviation;
            report["results"]["subpairs_checked"] = v.subpairs_checked;
            if (v.witness) {
                report["results"]["witness"] = {{"W1", vertex_set_to_json(v.witness->W1)},
                                                {"W2", vertex_set_to_json(v.witness->W2)},
                                                {"deviation", v.witness->deviation}};
            }
            int code = v.kind == RegularityKind::Regular     ? kExitOk
                       : v.kind == RegularityKind::Irregular ? kExitNegative
                                                             : kExitUnknown;
            session->finish(std::move(report), code);
        });
    }

    {
        CLI::App* reduce =
            reg->add_subcommand("reduce", "two-color reduced graph of a partition");
        auto input = std::make_shared<GraphInput>();
        auto coloring_path = std::make_shared<std::string>();
        auto partition_path = std::make_shared<std::string>();
        auto eps = std::make_shared<double>(0.25);
        auto mode = std::make_shared<std::string>("exhaustive");
        auto samples = std::make_shared<long long>(10000);
        auto seed = std::make_shared<uint64_t>(0);
        add_graph_input(reduce, *input);
        reduce->add_option("--coloring", *coloring_path, "coloring file")->required();
        reduce->add_option("--partition", *partition_path, "partition file")->required();
        reduce->add_option("--eps", *eps, "epsilon")->required();
        reduce->add_option("--mode", *mode, "exhaustive or sampled")
            ->check(CLI::IsMember({"exhaustive", "sampled"}));
        reduce->add_option("--samples", *samples, "sample count (sampled mode)");
        reduce->add_option("--seed", *seed, "seed (sampled mode)");
        reduce->callback([=]() {
            json config{{"in", input->path},          {"format", input->format},
                        {"coloring", *coloring_path}, {"partition", *partition_path},
                        {"eps", *eps},                {"mode", *mode},
                        {"samples", *samples},        {"seed", *seed}};
            json report = make_report("reg reduce", config);
            Graph g = input->load();
            EdgeColoring coloring = from_coloring_file(g, read_text_file(*coloring_path));
            Partition p = from_partition_file(g.vertex_count(), read_text_file(*partition_path));
            RegularityMode m;
            m.exhaustive = *mode == "exhaustive";
            m.samples = *samples;
            m.seed = *seed;
            ReducedGraph r = reduced_graph(g, coloring, p, *eps, m);
            report["status"] = "ok";
            report["results"]["parts"] = r.parts;
            report["results"]["certified"] = r.certified;
            json pair_list = json::array();
            for (int j = 1; j < r.parts; ++j) {
                for (int i = 0; i < j; ++i) {
                    const ReducedPair& info = r.at(i, j);
                    pair_list.push_back(
                        json{{"i", i},
                             {"j", j},
                             {"edge", info.edge == ReducedEdge::Absent ? "absent"
                                      : info.edge == ReducedEdge::Red  ? "R"
                                                                       : "B"},
                             {"regular_both", info.regular_both},
                             {"red_density", rational_to_json(info.red_density)},
                             {"blue_density", rational_to_json(info.blue_density)},
                             {"red_cross", info.red_cross},
                             {"blue_cross", info.blue_cross}});
                }
            }
            report["results"]["pairs"] = pair_list;
            session->finish(std::move(report), kExitOk);
        });
    }

    {
        CLI::App* mt = reg->add_subcommand("mt", "matching in a non-bipartite component");
        auto input = std::make_shared<GraphInput>();
        auto t = std::make_shared<double>(0);
        add_graph_input(mt, *input);
        mt->add_option("--t", *t, "saturation target (ceil applies)")->required();
        mt->callback([=]() {
            json config{{"in", input->path}, {"format", input->format}, {"t", *t}};
            json report = make_report("reg mt", config);
            Graph g = input->load();
            auto cert = property_mt(g, *t);
            report["status"] = cert ? "certificate" : "none";
            if (cert) {
                json edges = json::array();
                for (const auto& [u, v] : cert->matching)
                    edges.push_back(json::array({u, v}));
                report["results"]["matching"] = edges;
                report["results"]["component_index"] = cert->component_index;
                report["results"]["saturated"] = cert->saturated;
                report["results"]["odd_cycle"] = cycle_to_json(cert->odd_cycle);
            }
            session->finish(std::move(report), cert ? kExitOk : kExitNegative);
        });
    }

    // --------------------------------------------------------------- cycles
    CLI::App* cycles = app.add_subcommand("cycles", "exact cycle spectrum");
    cycles->require_subcommand(1);
    {
        CLI::App* spectrum =
            cycles->add_subcommand("spectrum", "presence of each length 3..lmax");
        auto input = std::make_shared<GraphInput>();
        auto lmax = std::make_shared<int>(0);
        auto budget = std::make_shared<uint64_t>(SearchLimits{}.node_cap);
        add_graph_input(spectrum, *input);
        spectrum->add_option("--lmax", *lmax, "largest length to decide")->required();
        spectrum->add_option("--budget-nodes", *budget, "node cap per length");
        spectrum->callback([=]() {
            json config{{"in", input->path}, {"format", input->format}, {"lmax", *lmax},
                        {"budget_nodes", *budget}};
            json report = make_report("cycles spectrum", config);
            Graph g = input->load();
            auto spec = cycle_spectrum(g, *lmax, SearchLimits{*budget});
            bool any_unknown = false;
            json entries = json::array();
            for (const auto& [len, entry] : spec) {
                json e{{"length", len},
                       {"status", entry.status == SearchStatus::Found  ? "present"
                                  : entry.status == SearchStatus::None ? "absent"
                                                                       : "unknown"}};
                if (entry.witness)
                    e["cycle"] = cycle_to_json(*entry.witness);
                if (entry.status == SearchStatus::Unknown)
                    any_unknown = true;
                entries.push_back(std::move(e));
            }
            report["status"] = any_unknown ? "partial" : "complete";
            report["results"]["spectrum"] = entries;
            session->finish(std::move(report), any_unknown ? kExitUnknown : kExitOk);
        });
    }

    // --------------------------------------------------------------- arrows
    CLI::App* arrows_cmd = app.add_subcommand("arrows", "arrowing decisions and CNF export");
    arrows_cmd->require_subcommand(1);

    {
        CLI::App* check = arrows_cmd->add_subcommand("check", "decide g -> (C_n, C_k)");
        auto input = std::make_shared<GraphInput>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto budget_nodes = std::make_shared<uint64_t>(SearchBudget{}.node_cap);
        auto budget_seconds = std::make_shared<double>(SearchBudget{}.time_cap_seconds);
        auto threads = std::make_shared<int>(1);
        auto deterministic = std::make_shared<bool>(false);
        auto witness_out = std::make_shared<std::string>();
        add_graph_input(check, *input);
        check->add_option("--n", *n, "red cycle length")->required();
        check->add_option("--k", *k, "blue cycle length")->required();
        check->add_option("--budget-nodes", *budget_nodes, "search node cap");
        check->add_option("--budget-seconds", *budget_seconds, "wall clock cap");
        check->add_option("--threads", *threads, "worker count");
        check->add_flag("--deterministic", *deterministic,
                        "single worker, reproducible witness, zeroed timings");
        check->add_option("--witness-out", *witness_out, "write a counterexample coloring here");
        check->callback([=]() {
            session->deterministic = *deterministic;
            json config{{"in", input->path},
                        {"format", input->format},
                        {"n", *n},
                        {"k", *k},
                        {"budget_nodes", *budget_nodes},
                        {"budget_seconds", *budget_seconds},
                        {"threads", *threads},
                        {"deterministic", *deterministic},
                        {"witness_out", *witness_out}};
            json report = make_report("arrows check", config);
            Graph g = input->load();
            SearchBudget budget;
            budget.node_cap = *budget_nodes;
            budget.time_cap_seconds = *budget_seconds;
            budget.threads = *threads;
            budget.deterministic = *deterministic;
            ArrowVerdict v = arrows(g, *n, *k, budget);
            report["status"] = to_string(v.status);
            report["results"]["nodes_explored"] = v.nodes_explored;
            report["results"]["wall_seconds"] = *deterministic ? 0.0 : v.wall_seconds;
            if (v.counterexample) {
                std::string text = to_coloring_file(*v.counterexample);
                if (!witness_out->empty())
                    write_text_file(*witness_out, text);
                else
                    report["results"]["counterexample"] = text;
            }
            int code = v.status == ArrowStatus::Arrows      ? kExitOk
                       : v.status == ArrowStatus::NotArrows ? kExitNegative
                                                            : kExitUnknown;
            session->finish(std::move(report), code);
        });
    }

    {
        CLI::App* cnf =
            arrows_cmd->add_subcommand("cnf", "DIMACS export of the arrowing instance");
        auto input = std::make_shared<GraphInput>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto out_path = std::make_shared<std::string>();
        add_graph_input(cnf, *input);
        cnf->add_option("--n", *n, "red cycle length")->required();
        cnf->add_option("--k", *k, "blue cycle length")->required();
        cnf->add_option("--out", *out_path, "output CNF file")->required();
        cnf->callback([=]() {
            json config{{"in", input->path}, {"format", input->format}, {"n", *n}, {"k", *k},
                        {"out", *out_path}};
            json report = make_report("arrows cnf", config);
            Graph g = input->load();
            std::string text = export_cnf(g, *n, *k);
            write_text_file(*out_path, text);
            report["status"] = "written";
            report["results"]["variables"] = g.edge_count();
            report["results"]["file"] = *out_path;
            session->finish(std::move(report), kExitOk);
        });
    }

    // -------------------------------------------------------------- formulas
    {
        CLI::App* formulas = app.add_subcommand("formulas", "reference Ramsey quantities");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(-1);
        formulas->add_option("--n", *n, "cycle length n")->required();
        formulas->add_option("--k", *k, "odd cycle length k (optional)");
        formulas->callback([=]() {
            json config{{"n", *n}, {"k", *k}};
            json report = make_report("formulas", config);
            report["status"] = "ok";
            report["results"]["rstar"] = rstar_formula(*n);
            report["results"]["rstar_note"] = "asymptotic formula; not asserted for small n";
            if (*k >= 0)
                report["results"]["ramsey_cycle_number"] = ramsey_cycle_number(*n, *k);
            session->finish(std::move(report), kExitOk);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InputError& e) {
        json report = make_report("error", json::object());
        report["status"] = "input-error";
        report["results"]["error"] = e.what();
        session->finish(std::move(report), kExitInputError);
        return session->emit();
    } catch (const BudgetExhausted& e) {
        json report = make_report("error", json::object());
        report["status"] = "budget-exhausted";
        report["results"]["error"] = e.what();
        session->finish(std::move(report), kExitUnknown);
        return session->emit();
    } catch (const std::exception& e) {
        json report = make_report("error", json::object());
        report["status"] = "internal-error";
        report["results"]["error"] = e.what();
        session->finish(std::move(report), kExitInputError);
        return session->emit();
    }

    if (session->finished)
        return session->emit();
    return kExitOk;
}
