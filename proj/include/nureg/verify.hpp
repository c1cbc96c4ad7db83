#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nureg/families.hpp"
#include "nureg/graph.hpp"

namespace nureg {

enum class Claim {
    NuBounds,           // ell <= nu <= reg, and the complete intersection lemma
    BlockEquality,      // block graphs: nu (both methods) = reg
    Closed,             // graphs with a closed labeling: ell = nu = reg
    CmBipartite,        // reg = 3 alpha + beta with a DOIP witness family
    Forbidden,          // DOIP versus forbidden structures on block graphs
    NoMultiarcs,        // block graphs: no loops or repeated arcs
    TwoBlock,           // two-block property: nu = reg = c
    CompletionDescent,  // some cut vertex completion lowers nu
    CharProbe,          // regularity agrees over two characteristics
};

std::string_view claim_name(Claim claim);
std::optional<Claim> parse_claim(std::string_view name);
std::vector<Claim> all_claims();

struct VerifyOptions {
    // Size of the enumerated corpus; -1 selects the claim's default.
    int max_n = -1;
    // Number of seeded random graphs and their largest order; -1 for defaults.
    int random_count = -1;
    int random_max_n = -1;
    std::uint64_t seed = 1;
    // Largest number of paths in the families of the forbidden and multiarc sweeps.
    int max_paths = 3;
    int characteristic = 2;
    // Second characteristic and sampled fraction for the characteristic probe.
    int probe_characteristic = 3;
    double sample_fraction = 0.1;
    unsigned threads = 1;
    // Graphs to use instead of the generated corpus.
    std::vector<Graph> corpus;
    // Specifications for the Cohen-Macaulay bipartite claim; empty selects the defaults.
    std::vector<CMBipartiteSpec> specs;
};

struct CaseResult {
    std::size_t index = 0;  // position in the corpus
    std::string graph6;
    std::string message;
    nlohmann::json detail;
};

struct VerifyReport {
    Claim claim = Claim::NuBounds;
    std::size_t checked = 0;
    std::vector<CaseResult> failures;
    std::vector<CaseResult> warnings;
    std::map<std::string, long> counters;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

// Throws ConfigError for unusable options.
VerifyReport verify(Claim claim, const VerifyOptions& opts = {});

// The graphs a claim runs over (for the Cohen-Macaulay claim, the built graphs).
std::vector<Graph> claim_corpus(Claim claim, const VerifyOptions& opts);

std::vector<CMBipartiteSpec> default_cm_specs();

nlohmann::json to_json(const VerifyReport& report);
std::string format_report(const VerifyReport& report);

struct ReportOptions {
    int max_nu_vertices = 14;
    int max_nu_block_vertices = 20;
    int max_variables = 16;
    int max_closed_vertices = 9;
    int characteristic = 2;
};

struct GraphReport {
    int ell = 0;
    VertexSequence longest_path;
    std::optional<int> nu;
    std::optional<OrientedPathFamily> nu_certificate;
    std::optional<int> reg;
    std::optional<int> cliques;  // c(G), block graphs only
    std::optional<Labeling> closed_labeling;
    bool closed_searched = false;
    // field -> reason it was left out
    std::map<std::string, std::string> omitted;
};

GraphReport report_graph(const Graph& g, const ReportOptions& opts = {});
nlohmann::json to_json(const GraphReport& report);
std::string format_graph_report(const GraphReport& report);

}  // namespace nureg
