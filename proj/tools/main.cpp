#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathchrom/claims.hpp"
#include "pathchrom/constructions.hpp"
#include "pathchrom/dp.hpp"
#include "pathchrom/io.hpp"

namespace pc = pathchrom;

namespace {

struct GlobalOpts {
    std::string format = "auto";
    std::string out_path;
    bool size_override = false;
    int jobs = 1;
    std::optional<uint64_t> seed;
};

void emit(const GlobalOpts& opts, const pc::ordered_json& j) {
    std::string text = j.dump(2) + "\n";
    if (opts.out_path.empty())
        std::cout << text;
    else
        pc::write_text_file(opts.out_path, text);
}

pc::Graph load_graph(const GlobalOpts& opts, const std::string& path) {
    return pc::load_graph_file(path, pc::parse_format_name(opts.format == "auto" ? "auto" : opts.format));
}

pc::ordered_json graph_output(const pc::Graph& g, const GlobalOpts& opts) {
    if (opts.format == "dimacs") {
        pc::ordered_json j;
        j["dimacs"] = pc::write_dimacs(g);
        return j;
    }
    return pc::graph_to_json(g);
}

void emit_graph(const pc::Graph& g, const GlobalOpts& opts) {
    if (opts.format == "dimacs") {
        std::string text = pc::write_dimacs(g);
        if (opts.out_path.empty())
            std::cout << text;
        else
            pc::write_text_file(opts.out_path, text);
    } else {
        emit(opts, pc::graph_to_json(g));
    }
}

int run_verify(const GlobalOpts& opts, const std::string& claim, const std::vector<std::string>& kv) {
    pc::ClaimParams params;
    for (const std::string& item : kv) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw pc::invalid_parameter("claim parameter `" + item + "` is not of the form key=value");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (opts.seed && !params.count("seed")) params["seed"] = std::to_string(*opts.seed);

    std::vector<std::string> ids;
    if (claim == "all") {
        if (!kv.empty()) throw pc::invalid_parameter("`verify all` takes no claim parameters");
        ids = pc::claim_ids();
    } else {
        ids = {claim};
    }

    std::vector<pc::ClaimReport> reports(ids.size());
    if (opts.jobs > 1 && ids.size() > 1) {
        std::vector<std::future<pc::ClaimReport>> futures(ids.size());
        size_t next = 0;
        // bounded fan-out: at most `jobs` claims in flight
        std::vector<size_t> inflight;
        while (next < ids.size() || !inflight.empty()) {
            while (next < ids.size() && static_cast<int>(inflight.size()) < opts.jobs) {
                futures[next] = std::async(std::launch::async, [&, i = next] { return pc::run_claim(ids[i], params); });
                inflight.push_back(next);
                ++next;
            }
            size_t done = inflight.front();
            inflight.erase(inflight.begin());
            reports[done] = futures[done].get();
        }
    } else {
        for (size_t i = 0; i < ids.size(); ++i) reports[i] = pc::run_claim(ids[i], params);
    }

    int npass = 0, nfail = 0, nskip = 0;
    for (const pc::ClaimReport& r : reports) {
        std::cerr << "claim " << r.claim_id << ": " << pc::verdict_name(r.verdict);
        if (!r.reason.empty()) std::cerr << " (" << r.reason << ")";
        std::cerr << "  [" << r.elapsed_seconds << "s]\n";
        switch (r.verdict) {
            case pc::ClaimReport::Verdict::pass: ++npass; break;
            case pc::ClaimReport::Verdict::fail: ++nfail; break;
            case pc::ClaimReport::Verdict::skipped: ++nskip; break;
        }
    }
    if (claim == "all") {
        pc::ordered_json j;
        j["schema"] = 1;
        auto arr = pc::ordered_json::array();
        for (const pc::ClaimReport& r : reports) arr.push_back(pc::report_to_json(r));
        j["reports"] = std::move(arr);
        j["summary"] = {{"pass", npass}, {"fail", nfail}, {"skipped", nskip}};
        emit(opts, j);
    } else {
        emit(opts, pc::report_to_json(reports.front()));
    }
    return nfail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact path-chromatic toolkit: decompositions, subset DP, graph products, claim verification"};
    app.require_subcommand(1);
    GlobalOpts opts;
    app.add_option("--format", opts.format, "graph file format: auto|dimacs|json")->capture_default_str();
    app.add_option("--out", opts.out_path, "write the JSON/graph output to this path");
    app.add_flag("--size-override", opts.size_override, "lift the subset-DP vertex-count guard");
    app.add_option("--jobs", opts.jobs, "independent claims run on this many workers")->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized test-corpus generation");

    std::string graph_path, decomp_path, claim_id;
    std::vector<std::string> claim_params;
    int max_k = -1;
    bool want_witness = false;

    auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number of a graph file");
    chromatic->add_option("file", graph_path)->required();

    auto* pathchrom_cmd = app.add_subcommand("path-chromatic", "exact path-chromatic number via the subset DP");
    pathchrom_cmd->add_option("file", graph_path)->required();
    pathchrom_cmd->add_option("--max-k", max_k, "decide chi_P <= K instead of optimizing");
    pathchrom_cmd->add_flag("--witness", want_witness, "include the witness enumeration");

    auto* special = app.add_subcommand("special", "search for a special enumeration");
    special->add_option("file", graph_path)->required();

    auto* construct = app.add_subcommand("construct", "build a named graph");
    construct->require_subcommand(1);
    int cn = 0, ck = 0, cm = 0;
    std::string base_file;
    int base_cycle = 0, base_complete = 0, base_mycielski = 0;
    auto* c_cycle = construct->add_subcommand("cycle", "cycle C_n");
    c_cycle->add_option("-n", cn)->required();
    auto* c_complete = construct->add_subcommand("complete", "complete graph K_n");
    c_complete->add_option("-n", cn)->required();
    auto* c_myc = construct->add_subcommand("mycielski", "Mycielski graph M_k");
    c_myc->add_option("-k", ck)->required();
    auto* c_rm = construct->add_subcommand("rm", "row product R_m(G)");
    c_rm->add_option("-m", cm)->required();
    c_rm->add_option("--base-cycle", base_cycle, "base graph C_n");
    c_rm->add_option("--base-complete", base_complete, "base graph K_n");
    c_rm->add_option("--base-mycielski", base_mycielski, "base graph M_k");
    c_rm->add_option("--base-file", base_file, "base graph from a file");

    auto* decomp = app.add_subcommand("decomp", "decomposition utilities");
    auto* decomp_check = decomp->add_subcommand("check", "validate a decomposition and evaluate its chromatic number");
    decomp_check->add_option("graph", graph_path)->required();
    decomp_check->add_option("decomposition", decomp_path)->required();

    auto* verify = app.add_subcommand("verify", "run registered claim verifications");
    verify->add_option("claim", claim_id, "claim id or `all`")->required();
    verify->add_option("params", claim_params, "key=value claim parameters");

    for (CLI::App* sub : {chromatic, pathchrom_cmd, special, construct, c_cycle, c_complete, c_myc, c_rm, decomp,
                          decomp_check, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        pc::DpOptions dp_opts;
        dp_opts.size_override = opts.size_override;
        if (chromatic->parsed()) {
            pc::Graph g = load_graph(opts, graph_path);
            pc::Coloring c = pc::optimal_coloring(g);
            pc::ordered_json j;
            j["schema"] = 1;
            j["chromatic_number"] = c.palette;
            j["coloring"] = c.color;
            emit(opts, j);
        } else if (pathchrom_cmd->parsed()) {
            pc::Graph g = load_graph(opts, graph_path);
            pc::ordered_json j;
            j["schema"] = 1;
            dp_opts.want_witness = want_witness;
            if (max_k >= 0) {
                pc::DpReport r = pc::path_chromatic_at_most(g, max_k, dp_opts);
                j["k"] = max_k;
                j["feasible"] = r.feasible;
                if (r.witness) j["witness"] = *r.witness;
                j["states_explored"] = r.states_explored;
                std::cerr << "decided in " << r.elapsed_seconds << "s\n";
            } else {
                pc::DpReport r = pc::path_chromatic_number(g, dp_opts);
                j["path_chromatic_number"] = r.k;
                if (r.witness) j["witness"] = *r.witness;
                j["states_explored"] = r.states_explored;
                std::cerr << "optimized in " << r.elapsed_seconds << "s\n";
            }
            emit(opts, j);
        } else if (special->parsed()) {
            pc::Graph g = load_graph(opts, graph_path);
            auto sigma = pc::exists_special_enumeration(g, dp_opts);
            pc::ordered_json j;
            j["schema"] = 1;
            j["special_enumeration"] = sigma ? pc::ordered_json(*sigma) : pc::ordered_json();
            emit(opts, j);
        } else if (construct->parsed()) {
            if (c_cycle->parsed()) {
                emit_graph(pc::make_cycle(cn), opts);
            } else if (c_complete->parsed()) {
                emit_graph(pc::make_complete(cn), opts);
            } else if (c_myc->parsed()) {
                emit_graph(pc::mycielski(ck).graph, opts);
            } else {
                pc::Graph base;
                if (c_rm->count("--base-cycle")) base = pc::make_cycle(base_cycle);
                else if (c_rm->count("--base-complete")) base = pc::make_complete(base_complete);
                else if (c_rm->count("--base-mycielski")) base = pc::mycielski(base_mycielski).graph;
                else if (!base_file.empty()) base = load_graph(opts, base_file);
                else throw pc::invalid_parameter("construct rm needs a --base-* option");
                emit_graph(pc::r_product(base, cm).graph, opts);
            }
        } else if (decomp_check->parsed()) {
            pc::Graph g = load_graph(opts, graph_path);
            pc::LoadedDecomposition d = pc::load_decomposition_file(decomp_path, g.order());
            pc::DecompositionReport rep = d.is_path ? pc::validate_path_decomposition(g, d.path)
                                                    : pc::validate_tree_decomposition(g, d.tree);
            pc::ordered_json j;
            j["schema"] = 1;
            j["kind"] = d.is_path ? "path" : "tree";
            j["valid"] = rep.ok;
            if (!rep.ok) j["violation"] = rep.violation;
            if (rep.ok)
                j["chromatic_number"] = d.is_path ? pc::decomposition_chromatic_number(g, d.path)
                                                  : pc::decomposition_chromatic_number(g, d.tree);
            emit(opts, j);
            return rep.ok ? 0 : 1;
        } else if (verify->parsed()) {
            return run_verify(opts, claim_id, claim_params);
        }
    } catch (const pc::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
