#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mgspec/graph_io.hpp>
#include <mgspec/mixed_graph.hpp>
#include <mgspec/theorems.hpp>

namespace {

using namespace mgspec;

std::string slurp(const std::string& path) {
    if (path == "-" || path.empty())
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

MatrixKind matrix_kind(const std::string& name) {
    if (name == "I") return MatrixKind::I;
    if (name == "ID") return MatrixKind::ID;
    if (name == "IL") return MatrixKind::IL;
    if (name == "IQ") return MatrixKind::IQ;
    if (name == "IN") return MatrixKind::IN;
    throw std::invalid_argument("unknown matrix kind: " + name);
}

SymMatrix build_matrix(const MixedGraph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::I: return integrated_adjacency(g);
        case MatrixKind::ID: return integrated_degree(g);
        case MatrixKind::IL: return integrated_laplacian(g);
        case MatrixKind::IQ: return integrated_signless(g);
        case MatrixKind::IN: return integrated_normalized(g);
    }
    throw std::invalid_argument("unknown matrix kind");
}

std::vector<int> parse_set(const NamedGraph& ng, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(ng.lookup(item));
    }
    if (out.empty()) throw std::invalid_argument("empty vertex set: '" + csv + "'");
    return out;
}

struct FamilySpec {
    FamilyKind kind;
    size_t params;
};

const std::map<std::string, FamilySpec>& family_table() {
    static const std::map<std::string, FamilySpec> table = {
        {"K", {FamilyKind::complete, 1}},
        {"KD", {FamilyKind::directed_complete, 1}},
        {"KM", {FamilyKind::mixed_complete, 1}},
        {"Kkm", {FamilyKind::complete_multipartite, 2}},
        {"KDkm", {FamilyKind::directed_multipartite, 2}},
        {"KMkm", {FamilyKind::mixed_multipartite, 2}},
        {"P", {FamilyKind::path, 1}},
        {"C", {FamilyKind::cycle, 1}},
        {"OP", {FamilyKind::oriented_path_same, 1}},
        {"OC", {FamilyKind::oriented_cycle_same, 1}},
        {"OCA", {FamilyKind::oriented_cycle_alternating, 1}},
        {"ACL", {FamilyKind::alternating_closed, 1}},
        {"EMPTY", {FamilyKind::empty, 1}},
    };
    return table;
}

std::string fmt_opt_dist(const std::optional<long long>& d) {
    return d ? std::to_string(*d) : std::string("inf");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of mixed graphs via the doubled-vertex matrices"};
    app.require_subcommand(1);

    std::string input = "-";
    VerifyOptions opt;
    app.add_option("-i,--input", input, "graph file ('-' for stdin)");
    app.add_option("--tol-group", opt.tol_group, "eigenvalue grouping tolerance");
    app.add_option("--tol-zero", opt.tol_zero, "zero detection threshold");
    app.add_option("--seed", opt.seed, "seed for sampled checks and random graphs");
    app.add_option("--instantiations", opt.instantiations, "draws per sampled check");

    auto* cmd_matrix = app.add_subcommand("matrix", "print one of the five matrices");
    std::string matrix_name;
    std::string matrix_format = "csv";
    cmd_matrix->add_option("kind", matrix_name, "I, ID, IL, IQ or IN")->required();
    cmd_matrix->add_option("--format", matrix_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* cmd_spectrum = app.add_subcommand("spectrum", "print grouped eigenvalues");
    std::string spectrum_name;
    bool spectrum_json_out = false;
    cmd_spectrum->add_option("kind", spectrum_name, "I, ID, IL, IQ or IN")->required();
    cmd_spectrum->add_flag("--json", spectrum_json_out, "emit JSON instead of text");

    auto* cmd_components = app.add_subcommand("components", "mixed components and predicates");

    auto* cmd_distance = app.add_subcommand("distance", "four-part mixed distance");
    std::vector<std::string> dist_vertices;
    std::vector<std::string> dist_sets;
    cmd_distance->add_option("vertices", dist_vertices, "two vertex names");
    cmd_distance->add_option("--sets", dist_sets, "two comma-separated vertex sets")
        ->expected(2);

    auto* cmd_check = app.add_subcommand("check", "evaluate the identity and bound registry");
    std::vector<std::string> check_bounds;
    bool check_all = false;
    cmd_check->add_option("--bound", check_bounds, "check only these ids");
    cmd_check->add_flag("--all", check_all, "check the whole registry (default)");

    auto* cmd_gen = app.add_subcommand("gen", "generate a named family as a graph file");
    std::string gen_family;
    std::vector<long long> gen_params;
    cmd_gen->add_option("family", gen_family, "K, KD, KM, Kkm, KDkm, KMkm, P, C, OP, OC, OCA, ACL, EMPTY")
        ->required();
    cmd_gen->add_option("params", gen_params, "family parameters");

    auto* cmd_random = app.add_subcommand("random", "generate a seeded random mixed graph");
    int random_n = 0;
    long long random_emult = 1, random_amult = 1;
    double random_density = 0.35;
    RandomFlags random_flags;
    cmd_random->add_option("n", random_n, "vertex count")->required();
    cmd_random->add_option("--max-edge-mult", random_emult, "maximum edge multiplicity");
    cmd_random->add_option("--max-arc-mult", random_amult, "maximum arc multiplicity");
    cmd_random->add_option("--density", random_density, "edge/arc probability");
    cmd_random->add_flag("--simple", random_flags.simple, "no loops, no multiplicities");
    cmd_random->add_flag("--loopless", random_flags.loopless, "no undirected loops");
    cmd_random->add_flag("--plain", random_flags.plain, "no multiplicities");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) {
            auto it = family_table().find(gen_family);
            if (it == family_table().end())
                throw std::invalid_argument("unknown family: " + gen_family);
            if (gen_params.size() != it->second.params)
                throw std::invalid_argument(gen_family + " takes " +
                                            std::to_string(it->second.params) + " parameter(s)");
            std::cout << render_graph(family(it->second.kind, gen_params));
            return 0;
        }
        if (cmd_random->parsed()) {
            auto g = random_mixed(opt.seed, random_n, random_emult, random_amult, random_density,
                                  random_flags);
            std::cout << render_graph(g);
            return 0;
        }

        NamedGraph ng = parse_graph(slurp(input));

        if (cmd_matrix->parsed()) {
            auto m = build_matrix(ng.g, matrix_kind(matrix_name));
            if (matrix_format == "json")
                std::cout << m.to_json().dump(2) << "\n";
            else
                std::cout << m.to_csv();
            return 0;
        }
        if (cmd_spectrum->parsed()) {
            auto m = build_matrix(ng.g, matrix_kind(spectrum_name));
            auto r = jacobi_eigen(m, opt.tol_group);
            if (spectrum_json_out) {
                std::cout << spectrum_json(r.spectrum).dump(2) << "\n";
            } else {
                std::printf("# tol_group %.3g\n", opt.tol_group);
                for (const auto& [value, mult] : r.spectrum.groups)
                    std::printf("%.12g %d\n", value, mult);
            }
            return 0;
        }
        if (cmd_components->parsed()) {
            EvalContext c(ng.g, opt);
            auto j = graph_summary_json(c);
            auto comps = nlohmann::ordered_json::array();
            for (const auto& comp : c.comps.components) {
                nlohmann::ordered_json cj;
                auto verts = nlohmann::ordered_json::array();
                for (int v : comp.vertices) {
                    bool second = v >= ng.g.n;
                    verts.push_back(ng.names[second ? v - ng.g.n : v] +
                                    (second ? "''" : "'"));
                }
                cj["vertices"] = std::move(verts);
                cj["trivial"] = comp.trivial;
                cj["bipartite"] = comp.bipartite;
                cj["path"] = comp.is_path;
                comps.push_back(std::move(cj));
            }
            j["mixed_components"] = std::move(comps);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (cmd_distance->parsed()) {
            auto assoc = build_associated(ng.g);
            if (!dist_sets.empty()) {
                auto X = parse_set(ng, dist_sets[0]);
                auto Y = parse_set(ng, dist_sets[1]);
                std::cout << "d(X,Y) " << fmt_opt_dist(set_distance(ng.g, assoc, X, Y)) << "\n";
                return 0;
            }
            if (dist_vertices.size() != 2)
                throw std::invalid_argument("distance needs two vertex names or --sets");
            int u = ng.lookup(dist_vertices[0]);
            int v = ng.lookup(dist_vertices[1]);
            auto d = mixed_distance(ng.g, assoc, u, v);
            std::cout << "d1 " << fmt_opt_dist(d.d1) << "\nd2 " << fmt_opt_dist(d.d2) << "\nd3 "
                      << fmt_opt_dist(d.d3) << "\nd4 " << fmt_opt_dist(d.d4) << "\nd "
                      << fmt_opt_dist(d.d) << "\n";
            return 0;
        }
        if (cmd_check->parsed()) {
            EvalContext c(ng.g, opt);
            std::vector<BoundReport> reports;
            if (check_bounds.empty()) {
                reports = run_all(c);
            } else {
                for (const auto& id : check_bounds) {
                    const auto& ids = identity_ids();
                    const auto& cds = characterization_ids();
                    if (std::find(ids.begin(), ids.end(), id) != ids.end())
                        reports.push_back(verify_identity(c, id));
                    else if (std::find(cds.begin(), cds.end(), id) != cds.end())
                        reports.push_back(verify_characterization(c, id));
                    else
                        reports.push_back(verify_bound(c, id));
                }
            }
            RunReportInputs in;
            in.spectra = {{"IL", &c.eigL.spectrum},
                          {"IQ", &c.eigQ.spectrum},
                          {"IN", &c.eigN.spectrum},
                          {"I", &c.eigI.spectrum}};
            in.reports = &reports;
            std::cout << run_report(c, in).dump(2) << "\n";
            for (const auto& r : reports)
                if (!r.holds) return 1;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
