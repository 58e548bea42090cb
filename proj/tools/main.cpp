#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dgl/conditions.hpp"
#include "dgl/digraph.hpp"
#include "dgl/extremal.hpp"
#include "dgl/insertion.hpp"
#include "dgl/io.hpp"
#include "dgl/oracle.hpp"
#include "dgl/verify.hpp"

namespace {

using nlohmann::json;

dgl::Digraph load(const std::string& path) {
    if (path == "-") return dgl::read_edge_list(std::cin);
    return dgl::read_edge_list_file(path);
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw dgl::GraphError("cannot write '" + out_path + "'");
    f << text;
}

json sequence_json(const dgl::VertexSequence& s) { return s.vertices; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph degree-condition and long-cycle toolkit"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "construct a named digraph family");
    std::string family, format = "edgelist", gen_out, arc_spec;
    int gp = 0, gq = 0, gn = 0, gm = 0, gk = 0;
    gen->add_option("family", family,
                    "one of: d5, d6, kstar, kstar-minus, thomassen, semidegree1, cycle")
        ->required();
    gen->add_option("--p", gp, "first partite set size (kstar families)");
    gen->add_option("--q", gq, "second partite set size (kstar families)");
    gen->add_option("--n", gn, "order (thomassen, cycle)");
    gen->add_option("--m", gm, "forbidden cycle length (thomassen)");
    gen->add_option("--k", gk, "parameter k (semidegree1)");
    gen->add_option("--arc", arc_spec, "removed arc 'u,v' (kstar-minus)");
    gen->add_option("--format", format, "edgelist or dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // ---- check ----
    auto* check = app.add_subcommand("check", "run every degree-condition report");
    std::string check_file;
    check->add_option("file", check_file, "edge-list file, or - for stdin")->required();

    // ---- cycles ----
    auto* cycles = app.add_subcommand("cycles", "cycle spectrum or one length query");
    std::string cycles_file;
    int cycles_k = 0;
    bool cycles_witnesses = false;
    cycles->add_option("file", cycles_file)->required();
    cycles->add_option("--k", cycles_k, "query a single cycle length");
    cycles->add_flag("--witnesses", cycles_witnesses, "include witness cycles");

    // ---- extend ----
    auto* extend = app.add_subcommand("extend", "run the long-cycle extension engine");
    std::string extend_file;
    int oracle_budget = 14;
    extend->add_option("file", extend_file)->required();
    extend->add_option("--oracle-budget", oracle_budget,
                       "largest order handed to the exact oracle");

    // ---- bypass ----
    auto* bypass = app.add_subcommand("bypass", "minimum-gap bypass of a given cycle");
    std::string bypass_file, bypass_cycle;
    bool three_vertex = false;
    bypass->add_option("file", bypass_file)->required();
    bypass->add_option("--cycle", bypass_cycle, "cycle as comma-separated labels")
        ->required();
    bypass->add_flag("--three-vertex", three_vertex,
                     "restrict to bypasses with one internal vertex");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "theorem verification campaign");
    std::string theorem, vmode = "exhaustive", verify_out, emit_dir;
    int vn = 0, jobs = 1;
    long long samples = 100000;
    std::uint64_t seed = 0;
    verify->add_option("--theorem", theorem, "1, 2, or c")->required()
        ->check(CLI::IsMember({"1", "2", "c"}));
    verify->add_option("--n", vn, "digraph order")->required();
    verify->add_option("--mode", vmode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", samples, "sample count (sampled mode)");
    verify->add_option("--seed", seed, "base seed (sampled mode; default 0)");
    verify->add_option("--out", verify_out, "write the JSON report here");
    verify->add_option("--emit-dir", emit_dir,
                       "write counterexample/candidate edge lists to this directory");
    verify->add_option("--jobs", jobs, "parallelism hint for the verifier");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            dgl::Digraph d = [&] {
                if (family == "d5") return dgl::d5();
                if (family == "d6") return dgl::d6();
                if (family == "kstar") return dgl::complete_bipartite(gp, gq);
                if (family == "kstar-minus") {
                    auto uv = parse_vertex_list(arc_spec);
                    if (uv.size() != 2)
                        throw dgl::GraphError("--arc expects 'u,v'");
                    return dgl::complete_bipartite_minus_arc(gp, gq, {uv[0], uv[1]});
                }
                if (family == "thomassen") return dgl::thomassen_family(gn, gm);
                if (family == "semidegree1") return dgl::semidegree_one_example(gk);
                if (family == "cycle") {
                    if (gn < 2) throw dgl::GraphError("cycle needs --n >= 2");
                    std::vector<std::pair<int, int>> arcs;
                    for (int i = 1; i <= gn; ++i) arcs.emplace_back(i, i % gn + 1);
                    return dgl::Digraph::build(gn, arcs);
                }
                throw dgl::GraphError("unknown family '" + family + "'");
            }();
            emit(gen_out, format == "dot" ? dgl::write_dot(d) : dgl::write_edge_list(d));
            return 0;
        }

        if (*check) {
            dgl::Digraph d = load(check_file);
            auto msd = dgl::min_semidegree(d);
            json out{{"n", d.order()},
                     {"arc_count", d.arc_count()},
                     {"strong", d.is_strong()},
                     {"min_semidegree",
                      {{"value", msd.value},
                       {"vertex", msd.vertex},
                       {"side", msd.side == dgl::DegreeSide::Out ? "out" : "in"}}},
                     {"reports",
                      {dgl::to_json(dgl::check_meyniel(d)),
                       dgl::to_json(dgl::check_star(d)),
                       dgl::to_json(dgl::check_star_star(d)),
                       dgl::to_json(dgl::check_theorem_c(d))}}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*cycles) {
            dgl::Digraph d = load(cycles_file);
            if (cycles->count("--k")) {
                auto w = dgl::has_cycle_of_length(d, cycles_k);
                if (!w) {
                    std::cout << "none\n";
                } else {
                    std::cout << json{{"k", cycles_k}, {"witness", sequence_json(*w)}}
                                     .dump(2)
                              << '\n';
                }
                return 0;
            }
            auto sp = dgl::spectrum(d);
            json out{{"n", sp.n}, {"present", sp.present}};
            if (cycles_witnesses) {
                json ws = json::object();
                for (const auto& [k, w] : sp.witnesses)
                    ws[std::to_string(k)] = sequence_json(w);
                out["witnesses"] = ws;
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (*extend) {
            dgl::Digraph d = load(extend_file);
            std::cout << dgl::to_json(dgl::find_long_cycle(d, oracle_budget)).dump(2)
                      << '\n';
            return 0;
        }

        if (*bypass) {
            dgl::Digraph d = load(bypass_file);
            dgl::VertexSequence c{dgl::VertexSequence::Kind::Cycle,
                                  parse_vertex_list(bypass_cycle)};
            auto b = dgl::find_min_gap_bypass(d, c, three_vertex);
            if (!b)
                std::cout << "none\n";
            else
                std::cout << dgl::to_json(*b).dump(2) << '\n';
            return 0;
        }

        if (*verify) {
            (void)jobs;  // hint only; the verifier is sequential
            dgl::VerifyMode mode = vmode == "exhaustive"
                                       ? dgl::exhaustive_mode()
                                       : dgl::sampled_mode(samples, seed);
            dgl::VerificationReport report =
                theorem == "1"   ? dgl::verify_theorem_1(vn, mode)
                : theorem == "2" ? dgl::verify_theorem_2(vn, mode)
                                 : dgl::explore_conjecture(vn, mode);
            emit(verify_out, dgl::to_json(report).dump(2) + "\n");
            std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
            if (!emit_dir.empty() && !report.counterexamples.empty()) {
                std::filesystem::create_directories(emit_dir);
                for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
                    dgl::Digraph d =
                        dgl::Digraph::build(report.n, report.counterexamples[i]);
                    std::ofstream f(emit_dir + "/" + dgl::theorem_name(report.theorem) +
                                    "_n" + std::to_string(report.n) + "_" +
                                    std::to_string(i) + ".edgelist");
                    f << dgl::write_edge_list(d);
                }
            }
            bool refuted = report.theorem != dgl::TheoremId::ConjectureC &&
                           !report.counterexamples.empty();
            return refuted ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
