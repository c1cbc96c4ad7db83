#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nureg/binomial_edge.hpp"
#include "nureg/blocks.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"
#include "nureg/families.hpp"
#include "nureg/forbidden.hpp"
#include "nureg/graph_io.hpp"
#include "nureg/json_io.hpp"
#include "nureg/nu.hpp"
#include "nureg/regularity.hpp"
#include "nureg/verify.hpp"

using namespace nureg;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Labeling parse_labeling(const std::string& text, int n) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    Labeling lab;
    int v = 0;
    while (in >> v) lab.push_back(v);
    if (!in.eof() || !is_labeling(lab, n))
        throw Error(ErrorCode::InvalidArgument, "labeling must be a permutation of 1.." + std::to_string(n));
    return lab;
}

// Applies fn to every graph in the file; a single graph gives a single JSON
// value, several give an array.
template <typename Fn>
void each_graph(const std::string& path, bool as_json, Fn fn) {
    std::vector<Graph> graphs = read_graph_file(path);
    if (graphs.empty()) throw Error(ErrorCode::ParseError, path + " holds no graph");
    json all = json::array();
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        if (!as_json && graphs.size() > 1) std::cout << "# graph " << k + 1 << " " << to_graph6(graphs[k]) << '\n';
        json item = fn(graphs[k]);
        if (as_json) all.push_back(item);
    }
    if (as_json) std::cout << (graphs.size() == 1 ? all[0] : all).dump(2) << '\n';
}

std::string vertex_list(std::span<const Vertex> seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.size(); ++k) out += (k ? " " : "") + std::to_string(seq[k] + 1);
    return out;
}

void print_betti(const BettiTable& table) {
    std::cout << "betti (i, j): b\n";
    for (const auto& [ij, b] : table.entries) std::cout << "  (" << ij.first << ", " << ij.second << "): " << b << '\n';
}

unsigned worker_count(int requested) {
    unsigned threads = requested > 0 ? static_cast<unsigned>(requested) : std::max(1U, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("NU_THREADS")) {
        int limit = std::atoi(cap);
        if (limit > 0) threads = std::min(threads, static_cast<unsigned>(limit));
    }
    return threads;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced path families, binomial edge ideals and their regularity"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Write JSON instead of text");

    std::string graph_file;
    std::string family_file;
    std::string labeling_text;

    auto* nu_cmd = app.add_subcommand("nu", "Largest edge total of a DOIP path family");
    std::string method = "general";
    bool cert = false;
    bool singletons = false;
    nu_cmd->add_option("graph", graph_file, "Edge list or graph6 file")->required();
    nu_cmd->add_option("--method", method, "general or block")->check(CLI::IsMember({"general", "block"}));
    nu_cmd->add_flag("--cert", cert, "Print an optimal family");
    nu_cmd->add_flag("--singletons", singletons, "Allow single-vertex paths in the search");

    auto* reg_cmd = app.add_subcommand("reg", "Regularity of S/J_G through its initial ideal");
    int characteristic = 2;
    bool betti = false;
    int max_vars = 16;
    reg_cmd->add_option("graph", graph_file)->required();
    reg_cmd->add_option("--p", characteristic, "Prime characteristic");
    reg_cmd->add_option("--labeling", labeling_text, "Label of each vertex, e.g. \"2 1 3\"");
    reg_cmd->add_flag("--betti", betti, "Print the graded Betti numbers");
    reg_cmd->add_option("--max-vars", max_vars, "Largest number of variables in the support");

    auto* reg_ideal_cmd = app.add_subcommand("reg-ideal", "Regularity of S/I for a squarefree monomial ideal");
    std::string ideal_file;
    reg_ideal_cmd->add_option("ideal", ideal_file, "One monomial per line, e.g. x1*y3")->required();
    reg_ideal_cmd->add_option("--p", characteristic);
    reg_ideal_cmd->add_flag("--betti", betti);
    reg_ideal_cmd->add_option("--max-vars", max_vars);

    auto* groebner_cmd = app.add_subcommand("groebner", "Generators of the lex initial ideal of J_G");
    groebner_cmd->add_option("graph", graph_file)->required();
    groebner_cmd->add_option("--labeling", labeling_text);

    auto* restrict_cmd = app.add_subcommand("restrict", "Generators of an initial ideal supported in W");
    std::string w_text;
    bool ideal_input = false;
    restrict_cmd->add_option("input", graph_file, "Graph file, or monomial file with --ideal")->required();
    restrict_cmd->add_option("--w", w_text, "Variables, e.g. \"x1,x3,y2\"")->required();
    restrict_cmd->add_option("--labeling", labeling_text);
    restrict_cmd->add_flag("--ideal", ideal_input, "Input is a monomial list");

    auto* doip_cmd = app.add_subcommand("doip", "DOIP test through the shortcut digraph");
    bool fixed = false;
    doip_cmd->add_option("graph", graph_file)->required();
    doip_cmd->add_option("family", family_file, "Lines \"v1 ... vk | start end\"")->required();
    doip_cmd->add_flag("--fixed", fixed, "Keep the given orientations (and sigma)");

    auto* forbidden_cmd = app.add_subcommand("forbidden", "Forbidden structures of a path family in a block graph");
    bool edge_disjoint = false;
    bool list_all = false;
    std::string kind_name;
    std::vector<int> strand_pair;
    forbidden_cmd->add_option("graph", graph_file)->required();
    forbidden_cmd->add_option("family", family_file)->required();
    forbidden_cmd->add_flag("--edge-disjoint", edge_disjoint, "Only witnesses sharing no edge with the paths");
    forbidden_cmd->add_option("--kind", kind_name, "ladder, strand, fork or double-fork")
        ->check(CLI::IsMember({"ladder", "strand", "fork", "double-fork"}));
    forbidden_cmd->add_flag("--all", list_all, "List every structure of the chosen kind");
    forbidden_cmd->add_option("--strands", strand_pair, "List the strands from path i to path j")->expected(2);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
    gen_cmd->require_subcommand(1);
    bool as_graph6 = false;
    gen_cmd->add_flag("--graph6", as_graph6, "Write graph6 instead of an edge list");
    auto* gen_fm = gen_cmd->add_subcommand("fm", "The bipartite graph F_m");
    int m = 1;
    gen_fm->add_option("m", m)->required()->check(CLI::PositiveNumber);
    auto* gen_cmbip = gen_cmd->add_subcommand("cmbip", "Cohen-Macaulay bipartite graph from a component list");
    std::string spec_file;
    gen_cmbip->add_option("spec", spec_file, "e.g. \"chain 3 4 3 4; F 1; F 4\"")->required();
    auto* gen_rand = gen_cmd->add_subcommand("randblock", "Seeded random connected block graph");
    std::uint64_t seed = 1;
    int n = 1;
    int max_block = 3;
    gen_rand->add_option("seed", seed)->required();
    gen_rand->add_option("n", n)->required();
    gen_rand->add_option("maxblock", max_block)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a claim over a corpus of graphs");
    std::string claim_text;
    VerifyOptions vopts;
    int threads = 0;
    std::string corpus_file;
    std::string specs_file;
    std::string report_file;
    verify_cmd->add_option("claim", claim_text, "Claim name or 'all'")->required();
    verify_cmd->add_option("--max-n", vopts.max_n, "Largest order of the enumerated corpus");
    verify_cmd->add_option("--random", vopts.random_count, "Number of seeded random graphs");
    verify_cmd->add_option("--random-max-n", vopts.random_max_n, "Largest order of the random graphs");
    verify_cmd->add_option("--seed", vopts.seed);
    verify_cmd->add_option("--paths", vopts.max_paths, "Largest family size in family sweeps");
    verify_cmd->add_option("--p", vopts.characteristic);
    verify_cmd->add_option("--probe-p", vopts.probe_characteristic);
    verify_cmd->add_option("--sample", vopts.sample_fraction, "Sampled fraction for char-probe");
    verify_cmd->add_option("--threads", threads, "Worker threads (NU_THREADS caps this)");
    verify_cmd->add_option("--corpus", corpus_file, "Graph file replacing the generated corpus");
    verify_cmd->add_option("--specs", specs_file, "cm-bipartite specifications, one per line");
    verify_cmd->add_option("--out", report_file, "Also write the JSON report here");

    auto* report_cmd = app.add_subcommand("report", "ell, nu, reg, c and a closed labeling of a graph");
    ReportOptions ropts;
    report_cmd->add_option("graph", graph_file)->required();
    report_cmd->add_option("--max-nu", ropts.max_nu_vertices, "Largest order for the general nu search");
    report_cmd->add_option("--max-vars", ropts.max_variables);
    report_cmd->add_option("--p", ropts.characteristic);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        HochsterOptions hopts;
        hopts.characteristic = characteristic;
        hopts.max_variables = max_vars;

        if (*nu_cmd) {
            NuOptions opts;
            opts.method = method == "block" ? NuMethod::Block : NuMethod::General;
            opts.allow_singletons = singletons;
            each_graph(graph_file, as_json, [&](const Graph& g) {
                NuResult r = nu(g, opts);
                if (!as_json) {
                    std::cout << r.value << '\n';
                    if (cert) std::cout << format_family(r.certificate);
                }
                return json{{"nu", r.value}, {"method", method}, {"certificate", to_json(r.certificate)}};
            });
        } else if (*reg_cmd) {
            each_graph(graph_file, as_json, [&](const Graph& g) {
                Labeling lab = labeling_text.empty() ? identity_labeling(g.order()) : parse_labeling(labeling_text, g.order());
                BettiTable table = betti_table(initial_ideal(g, lab), hopts);
                if (!as_json) {
                    std::cout << table.regularity() << '\n';
                    if (betti) print_betti(table);
                }
                json out = {{"reg", table.regularity()}, {"characteristic", characteristic}};
                if (betti) out["betti"] = to_json(table);
                return out;
            });
        } else if (*reg_ideal_cmd) {
            SquarefreeMonomialIdeal ideal = parse_ideal_string(slurp(ideal_file));
            BettiTable table = betti_table(ideal, hopts);
            if (as_json) {
                json out = {{"reg", table.regularity()}, {"characteristic", characteristic}};
                if (betti) out["betti"] = to_json(table);
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << table.regularity() << '\n';
                if (betti) print_betti(table);
            }
        } else if (*groebner_cmd) {
            each_graph(graph_file, as_json, [&](const Graph& g) {
                Labeling lab = labeling_text.empty() ? identity_labeling(g.order()) : parse_labeling(labeling_text, g.order());
                SquarefreeMonomialIdeal ideal = initial_ideal(g, lab);
                if (!as_json)
                    for (const auto& gen : ideal.generators) std::cout << gen.to_string() << '\n';
                return to_json(ideal);
            });
        } else if (*restrict_cmd) {
            VariableSet w = parse_variable_set(w_text);
            auto emit = [&](const SquarefreeMonomialIdeal& ideal) {
                SquarefreeMonomialIdeal r = restrict_ideal(ideal, w);
                if (!as_json)
                    for (const auto& gen : r.generators) std::cout << gen.to_string() << '\n';
                return to_json(r);
            };
            if (ideal_input) {
                json out = emit(parse_ideal_string(slurp(graph_file)));
                if (as_json) std::cout << out.dump(2) << '\n';
            } else {
                each_graph(graph_file, as_json, [&](const Graph& g) {
                    Labeling lab =
                        labeling_text.empty() ? identity_labeling(g.order()) : parse_labeling(labeling_text, g.order());
                    return emit(initial_ideal(g, lab));
                });
            }
        } else if (*doip_cmd) {
            OrientedPathFamily fam = parse_family_string(slurp(family_file));
            each_graph(graph_file, as_json, [&](const Graph& g) {
                validate_family(g, fam);
                DoipResult r = is_doip(g, fam, fixed ? OrientationMode::Fixed : OrientationMode::Search);
                json out = to_json(r);
                if (r.doip) out["arcs"] = to_json(build_k(g, r.family));
                if (!as_json) {
                    std::cout << (r.doip ? "DOIP" : "not DOIP") << '\n';
                    if (r.doip) std::cout << format_family(r.family);
                    for (const auto& f : r.failures) {
                        std::cout << "orientation starts " << vertex_list(f.starts) << ": ";
                        if (f.order_violation)
                            std::cout << "arc (" << f.order_violation->first + 1 << ", " << f.order_violation->second + 1
                                      << ") runs against sigma\n";
                        else {
                            std::cout << "cycle";
                            for (int i : f.cycle) std::cout << ' ' << i + 1;
                            std::cout << '\n';
                        }
                    }
                }
                return out;
            });
        } else if (*forbidden_cmd) {
            OrientedPathFamily fam = parse_family_string(slurp(family_file));
            std::optional<ForbiddenKind> kind;
            if (kind_name == "ladder") kind = ForbiddenKind::CompleteLadder;
            if (kind_name == "strand") kind = ForbiddenKind::InternalStrand;
            if (kind_name == "fork") kind = ForbiddenKind::InternalFork;
            if (kind_name == "double-fork") kind = ForbiddenKind::DoubleFork;
            each_graph(graph_file, as_json, [&](const Graph& g) {
                validate_family(g, fam);
                json out;
                if (!strand_pair.empty()) {
                    json list = json::array();
                    for (const Strand& s : find_strands(g, fam, strand_pair[0] - 1, strand_pair[1] - 1)) {
                        list.push_back({{"path", vertices_json(s.path)}, {"internal", s.internal}});
                        if (!as_json) std::cout << vertex_list(s.path) << (s.internal ? "  internal" : "") << '\n';
                    }
                    return json{{"strands", list}};
                }
                std::vector<ForbiddenWitness> found;
                if (list_all) {
                    if (!kind) throw Error(ErrorCode::InvalidArgument, "--all needs --kind");
                    found = all_forbidden(g, fam, *kind, edge_disjoint);
                } else {
                    ForbiddenSearch search;
                    search.edge_disjoint_only = edge_disjoint;
                    search.only_kind = kind;
                    if (auto w = find_forbidden(g, fam, search)) found.push_back(*w);
                }
                json list = json::array();
                for (const auto& w : found) {
                    list.push_back(to_json(w));
                    if (!as_json)
                        std::cout << forbidden_kind_name(w.kind) << " from " << w.from_path + 1 << " to " << w.to_path + 1
                                  << ": " << vertex_list(std::vector<Vertex>(w.vertices.begin(), w.vertices.end()))
                                  << '\n';
                }
                if (!as_json && found.empty()) std::cout << "none\n";
                return list_all ? json{{"witnesses", list}} : json{{"witness", found.empty() ? json(nullptr) : list[0]}};
            });
        } else if (*gen_cmd) {
            Graph g;
            json extra;
            if (*gen_fm) {
                g = make_fm(m);
            } else if (*gen_cmbip) {
                std::ifstream probe(spec_file);
                CMBipartiteGraph built = build_cm_bipartite(parse_cm_spec(probe ? slurp(spec_file) : spec_file));
                g = built.graph;
                extra = {{"alpha", built.alpha},
                         {"beta", built.beta},
                         {"formula", built.formula},
                         {"witness", to_json(built.witness)}};
                if (!as_json)
                    std::cout << "# alpha " << built.alpha << " beta " << built.beta << " formula " << built.formula
                              << '\n';
            } else {
                g = random_block_graph(seed, n, max_block);
            }
            if (as_json) {
                json out = to_json(g);
                if (!extra.is_null()) out.update(extra);
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << (as_graph6 ? to_graph6(g) + "\n" : write_edge_list(g));
            }
        } else if (*verify_cmd) {
            vopts.threads = worker_count(threads);
            if (!corpus_file.empty()) vopts.corpus = read_graph_file(corpus_file);
            if (!specs_file.empty()) {
                std::istringstream lines(slurp(specs_file));
                std::string line;
                while (std::getline(lines, line))
                    if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] != '#')
                        vopts.specs.push_back(parse_cm_spec(line));
            }
            std::vector<Claim> claims;
            if (claim_text == "all") {
                claims = all_claims();
            } else if (auto c = parse_claim(claim_text)) {
                claims.push_back(*c);
            } else {
                std::cerr << "unknown claim '" << claim_text << "'; expected one of:";
                for (Claim c : all_claims()) std::cerr << ' ' << claim_name(c);
                std::cerr << " all\n";
                return kExitUsage;
            }
            bool ok = true;
            json reports = json::array();
            for (Claim c : claims) {
                VerifyReport r = verify(c, vopts);
                ok = ok && r.ok();
                reports.push_back(to_json(r));
                if (!as_json) std::cout << format_report(r);
            }
            json out = claims.size() == 1 ? reports[0] : json{{"ok", ok}, {"reports", reports}};
            if (as_json) std::cout << out.dump(2) << '\n';
            if (!report_file.empty()) std::ofstream(report_file) << out.dump(2) << '\n';
            return ok ? 0 : kExitViolation;
        } else if (*report_cmd) {
            each_graph(graph_file, as_json, [&](const Graph& g) {
                GraphReport r = report_graph(g, ropts);
                if (!as_json) std::cout << format_graph_report(r);
                return to_json(r);
            });
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::SpecInvariantViolated ? kExitViolation : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
