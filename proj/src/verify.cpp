#include "nureg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "nureg/blocks.hpp"
#include "nureg/corpus.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"
#include "nureg/forbidden.hpp"
#include "nureg/graph_io.hpp"
#include "nureg/json_io.hpp"
#include "nureg/nu.hpp"
#include "nureg/regularity.hpp"

namespace nureg {

using nlohmann::json;

namespace {

struct ClaimInfo {
    Claim claim;
    std::string_view name;
};

constexpr ClaimInfo kClaims[] = {
    {Claim::NuBounds, "nu-bounds"},
    {Claim::BlockEquality, "block-equality"},
    {Claim::Closed, "closed"},
    {Claim::CmBipartite, "cm-bipartite"},
    {Claim::Forbidden, "forbidden"},
    {Claim::NoMultiarcs, "no-multiarcs"},
    {Claim::TwoBlock, "two-block"},
    {Claim::CompletionDescent, "completion-descent"},
    {Claim::CharProbe, "char-probe"},
};

}  // namespace

std::string_view claim_name(Claim claim) {
    for (const auto& info : kClaims)
        if (info.claim == claim) return info.name;
    return "?";
}

std::optional<Claim> parse_claim(std::string_view name) {
    for (const auto& info : kClaims)
        if (info.name == name) return info.claim;
    return std::nullopt;
}

std::vector<Claim> all_claims() {
    std::vector<Claim> out;
    for (const auto& info : kClaims) out.push_back(info.claim);
    return out;
}

std::vector<CMBipartiteSpec> default_cm_specs() {
    using C = CMComponent;
    return {
        {{C::f(1)}},
        {{C::f(2)}},
        {{C::f(1), C::f(1)}},
        {{C::f(3)}},
        {{C::f(2), C::f(1)}},
        {{C::chain({3, 4, 3, 4}), C::f(1), C::f(4)}},
    };
}

namespace {

struct Outcome {
    std::vector<std::pair<std::string, json>> failures;
    std::vector<std::pair<std::string, json>> warnings;
    std::map<std::string, long> counters;

    void fail(std::string message, json detail = {}) { failures.emplace_back(std::move(message), std::move(detail)); }
};

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Graph> random_block_corpus(std::uint64_t seed, int count, int min_n, int max_n, bool need_cut_vertex) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        int n = pick(rng, min_n, max_n);
        int max_block = pick(rng, 2, 4);
        Graph g = random_block_graph(rng(), n, max_block);
        if (need_cut_vertex && block_decomposition(g).cut_vertices.empty()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> labeled_connected_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : labeled_graphs(n, true)) out.push_back(std::move(g));
    return out;
}

int or_default(int value, int fallback) {
    return value < 0 ? fallback : value;
}

HochsterOptions hochster(const VerifyOptions& opts) {
    HochsterOptions h;
    h.characteristic = opts.characteristic;
    return h;
}

std::vector<Graph> sample(const std::vector<Graph>& graphs, double fraction, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Graph> out;
    for (const Graph& g : graphs)
        if (unit(rng) < fraction) out.push_back(g);
    if (out.empty() && !graphs.empty()) out.push_back(graphs.front());
    return out;
}

// Every orientation of the non-singleton paths, starting with the given one.
template <typename Fn>
void for_each_orientation(const OrientedPathFamily& fam, Fn&& fn) {
    std::vector<int> free_paths;
    for (int i = 0; i < fam.size(); ++i)
        if (!fam.paths[i].singleton()) free_paths.push_back(i);
    OrientedPathFamily oriented = fam;
    for (unsigned mask = 0; mask < (1U << free_paths.size()); ++mask) {
        for (std::size_t b = 0; b < free_paths.size(); ++b) {
            const OrientedPath& p = fam.paths[free_paths[b]];
            oriented.paths[free_paths[b]] = (mask >> b) & 1U ? p.flipped() : p;
        }
        fn(oriented);
    }
}

json family_case(const Graph& g, const OrientedPathFamily& fam) {
    return {{"graph", to_json(g)}, {"family", to_json(fam)}};
}

Outcome check_nu_bounds(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    int ell = std::max(0, longest_induced_path_length(g));
    NuResult r = nu(g);
    int reg = reg_binomial_edge(g, hochster(opts));
    json detail = {{"graph", to_json(g)}, {"ell", ell}, {"nu", r.value}, {"reg", reg}, {"certificate", to_json(r.certificate)}};
    if (ell > r.value) out.fail("ell exceeds nu", detail);
    if (r.value > reg) out.fail("nu exceeds reg", detail);
    if (!r.certificate.paths.empty() && !complete_intersection_check(g, r.certificate).holds)
        out.fail("restricted initial ideal is not the complete intersection of the path monomials", detail);
    if (ell < r.value) ++out.counters["ell < nu"];
    if (r.value < reg) ++out.counters["nu < reg"];
    return out;
}

Outcome check_block_equality(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    if (!is_block_graph(g)) {
        out.fail("not a block graph", {{"graph", to_json(g)}});
        return out;
    }
    NuResult general = nu(g, NuMethod::General);
    NuResult block = nu(g, NuMethod::Block);
    int reg = reg_binomial_edge(g, hochster(opts));
    json detail = {{"graph", to_json(g)},
                   {"nu", general.value},
                   {"nu_block", block.value},
                   {"reg", reg},
                   {"certificate", to_json(general.certificate)}};
    if (general.value != block.value) out.fail("the two nu methods disagree", detail);
    if (general.value != reg) out.fail("nu differs from reg", detail);
    return out;
}

Outcome check_closed(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    std::optional<Labeling> lab = find_closed_labeling(g);
    if (!lab) {
        ++out.counters["not closed"];
        return out;
    }
    ++out.counters["closed"];
    int ell = std::max(0, longest_induced_path_length(g));
    int nu_value = nu(g).value;
    int reg = reg_binomial_edge(g, hochster(opts));
    int reg_closed = reg_binomial_edge(g, *lab, hochster(opts));
    json detail = {{"graph", to_json(g)},
                   {"labeling", labeling_json(*lab)},
                   {"ell", ell},
                   {"nu", nu_value},
                   {"reg", reg},
                   {"reg_closed_labeling", reg_closed}};
    bool connected = is_connected(g);
    if (!connected) ++out.counters["closed and disconnected"];
    if (ell != nu_value)
        out.fail(connected ? "ell differs from nu" : "ell differs from nu (disconnected graph)", detail);
    if (nu_value != reg) out.fail("nu differs from reg", detail);
    if (reg != reg_closed) out.fail("reg depends on the labeling", detail);
    return out;
}

constexpr int kOracleVertices = 8;

Outcome check_cm_bipartite(const CMBipartiteSpec& spec, const VerifyOptions& opts) {
    Outcome out;
    CMBipartiteGraph built = build_cm_bipartite(spec);
    const Graph& g = built.graph;
    json detail = {{"spec", format_cm_spec(spec)},
                   {"graph", to_json(g)},
                   {"alpha", built.alpha},
                   {"beta", built.beta},
                   {"formula", built.formula},
                   {"witness", to_json(built.witness)}};
    validate_family(g, built.witness);
    DoipResult doip = is_doip(g, built.witness, OrientationMode::Search);
    if (!doip.doip) out.fail("witness family is not DOIP", detail);
    if (built.witness.total_edges() != built.formula) out.fail("witness edge total differs from 3 alpha + beta", detail);
    if (g.order() <= kOracleVertices) {
        ++out.counters["oracle checked"];
        int reg = reg_binomial_edge(g, hochster(opts));
        int nu_value = nu(g).value;
        detail["reg"] = reg;
        detail["nu"] = nu_value;
        if (reg != built.formula) out.fail("reg differs from 3 alpha + beta", detail);
        if (nu_value != built.formula) out.fail("nu differs from 3 alpha + beta", detail);
    } else {
        ++out.counters["structure only"];
    }
    return out;
}

Outcome check_forbidden(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    out.counters["DOIP for some but not every orientation"] = 0;
    for_each_family(g, opts.max_paths, true, [&](const OrientedPathFamily& fam) {
        if (!out.failures.empty()) return;
        ++out.counters["families"];
        std::optional<ForbiddenWitness> witness = find_forbidden(g, fam);
        ForbiddenSearch edge_disjoint;
        edge_disjoint.edge_disjoint_only = true;
        std::optional<ForbiddenWitness> disjoint_witness = find_forbidden(g, fam, edge_disjoint);
        bool ladder = !all_forbidden(g, fam, ForbiddenKind::CompleteLadder).empty();
        auto detail = [&] {
            json d = family_case(g, fam);
            if (witness) d["witness"] = to_json(*witness);
            return d;
        };
        if (witness) {
            ++out.counters["with forbidden structure"];
            if (!check_witness(g, fam, *witness)) out.fail("reported witness does not satisfy its definition", detail());
        }
        if (disjoint_witness && !check_witness(g, fam, *disjoint_witness, true))
            out.fail("edge-disjoint witness does not satisfy its definition", detail());
        if (witness.has_value() != (disjoint_witness.has_value() || ladder))
            out.fail("edge-disjoint reformulation disagrees", detail());

        bool every = true;
        bool some = false;
        for_each_orientation(fam, [&](const OrientedPathFamily& oriented) {
            DirectedMultigraph k = build_k(g, oriented);
            auto at = [&] {
                json d = family_case(g, oriented);
                d["arcs"] = to_json(k);
                return d;
            };
            if (k.has_loop()) out.fail("shortcut digraph has a loop", at());
            if (k.has_multiarc()) out.fail("shortcut digraph has a repeated arc", at());
            if (k.has_two_cycle() != witness.has_value())
                out.fail(witness ? "forbidden structure without a 2-cycle" : "2-cycle without a forbidden structure", at());
            if (!arc_strand_correspondence_check(g, oriented).ok) out.fail("arcs and strands do not correspond", at());
            bool acyclic = is_directed_acyclic(k).acyclic;
            every = every && acyclic;
            some = some || acyclic;
        });
        if (every == witness.has_value())
            out.fail(every ? "DOIP for every orientation despite a forbidden structure"
                           : "not DOIP for every orientation but no forbidden structure",
                     detail());
        if (is_doip(g, fam, OrientationMode::Search).doip != some)
            out.fail("orientation search disagrees with the exhaustive check", detail());
        if (some && !every) ++out.counters["DOIP for some but not every orientation"];
    });
    return out;
}

Outcome check_no_multiarcs(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    for_each_family(g, opts.max_paths, true, [&](const OrientedPathFamily& fam) {
        if (!out.failures.empty()) return;
        ++out.counters["families"];
        for_each_orientation(fam, [&](const OrientedPathFamily& oriented) {
            DirectedMultigraph k = build_k(g, oriented);
            if (k.has_loop() || k.has_multiarc()) {
                json detail = family_case(g, oriented);
                detail["arcs"] = to_json(k);
                out.fail(k.has_loop() ? "shortcut digraph has a loop" : "shortcut digraph has a repeated arc", detail);
            }
        });
    });
    return out;
}

Outcome check_two_block(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    CliqueStructure cs = structure_predicates(g);
    if (!cs.two_block) {
        ++out.counters["without the two-block property"];
        return out;
    }
    ++out.counters["two-block"];
    int nu_value = nu(g, NuMethod::Block).value;
    json detail = {{"graph", to_json(g)}, {"c", cs.clique_count}, {"nu", nu_value}};
    if (nu_value != cs.clique_count) out.fail("nu differs from c", detail);
    try {
        int reg = reg_binomial_edge(g, hochster(opts));
        detail["reg"] = reg;
        if (reg != cs.clique_count) out.fail("reg differs from c", detail);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        ++out.counters["reg skipped"];
    }
    return out;
}

Outcome check_completion_descent(const Graph& g, const VerifyOptions&) {
    Outcome out;
    json detail = {{"graph", to_json(g)}};
    try {
        Vertex c = completion_descent_check(g);
        detail["cut_vertex"] = c + 1;
        ++out.counters["descended"];
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SpecInvariantViolated) throw;
        out.fail("no cut vertex completion lowers nu", detail);
    }
    return out;
}

Outcome check_characteristic(const Graph& g, const VerifyOptions& opts) {
    Outcome out;
    HochsterOptions a = hochster(opts);
    HochsterOptions b = a;
    b.characteristic = opts.probe_characteristic;
    SquarefreeMonomialIdeal ideal = initial_ideal(g);
    BettiTable ta = betti_table(ideal, a);
    BettiTable tb = betti_table(ideal, b);
    if (ta.regularity() != tb.regularity()) {
        out.warnings.emplace_back("CHARACTERISTIC-SENSITIVE",
                                  json{{"graph", to_json(g)},
                                       {"reg_p" + std::to_string(a.characteristic), ta.regularity()},
                                       {"reg_p" + std::to_string(b.characteristic), tb.regularity()}});
    }
    if (ta.entries != tb.entries) ++out.counters["Betti tables differ"];
    return out;
}

// Runs check on every index, possibly on several threads, and keeps the
// outcomes in corpus order.
template <typename Check>
std::vector<Outcome> run_all(std::size_t count, unsigned threads, Check check) {
    std::vector<Outcome> outcomes(count);
    auto guarded = [&](std::size_t k) {
        try {
            outcomes[k] = check(k);
        } catch (const std::exception& e) {
            outcomes[k] = Outcome{};
            outcomes[k].fail(std::string("error: ") + e.what());
        }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) guarded(k);
        return outcomes;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) guarded(k);
        });
    for (auto& th : pool) th.join();
    return outcomes;
}

}  // namespace

std::vector<Graph> claim_corpus(Claim claim, const VerifyOptions& opts) {
    if (!opts.corpus.empty() && claim != Claim::CmBipartite) return opts.corpus;
    switch (claim) {
        case Claim::NuBounds: {
            std::vector<Graph> out = labeled_connected_up_to(or_default(opts.max_n, 5));
            std::mt19937_64 rng(opts.seed);
            int n = or_default(opts.random_max_n, 6);
            for (int k = 0; k < or_default(opts.random_count, 200); ++k) out.push_back(random_connected_graph(rng, n));
            return out;
        }
        case Claim::BlockEquality: {
            std::vector<Graph> out = block_graphs(or_default(opts.max_n, 7), true);
            for (Graph& g : random_block_corpus(opts.seed, or_default(opts.random_count, 100), 1,
                                                or_default(opts.random_max_n, 8), false))
                out.push_back(std::move(g));
            return out;
        }
        case Claim::Closed: {
            std::vector<Graph> out;
            for (int n = 1; n <= or_default(opts.max_n, 6); ++n)
                for (Graph& g : graphs_up_to_isomorphism(n, false)) out.push_back(std::move(g));
            return out;
        }
        case Claim::CmBipartite: {
            std::vector<Graph> out;
            for (const auto& spec : opts.specs.empty() ? default_cm_specs() : opts.specs)
                out.push_back(build_cm_bipartite(spec).graph);
            return out;
        }
        case Claim::Forbidden:
        case Claim::TwoBlock:
            return block_graphs(or_default(opts.max_n, 8), true);
        case Claim::NoMultiarcs:
            return random_block_corpus(opts.seed, or_default(opts.random_count, 100), 1,
                                       or_default(opts.random_max_n, 10), false);
        case Claim::CompletionDescent:
            return random_block_corpus(opts.seed, or_default(opts.random_count, 50), 3,
                                       or_default(opts.random_max_n, 10), true);
        case Claim::CharProbe: {
            VerifyOptions base = opts;
            base.max_n = -1;
            base.random_count = -1;
            base.random_max_n = -1;
            std::vector<Graph> pool = claim_corpus(Claim::NuBounds, base);
            for (Graph& g : claim_corpus(Claim::BlockEquality, base)) pool.push_back(std::move(g));
            return sample(pool, opts.sample_fraction, opts.seed);
        }
    }
    return {};
}

VerifyReport verify(Claim claim, const VerifyOptions& opts) {
    if (!is_supported_characteristic(opts.characteristic) || !is_supported_characteristic(opts.probe_characteristic))
        throw Error(ErrorCode::ConfigError, "characteristics must be primes up to 251");
    if (opts.max_paths < 1 || opts.max_paths > 6) throw Error(ErrorCode::ConfigError, "max_paths must lie in 1..6");
    if (opts.sample_fraction <= 0 || opts.sample_fraction > 1)
        throw Error(ErrorCode::ConfigError, "sample fraction must lie in (0, 1]");
    if (opts.max_n > 11 || opts.random_max_n > 64) throw Error(ErrorCode::ConfigError, "corpus sizes exceed the limits");

    auto started = std::chrono::steady_clock::now();
    VerifyReport report;
    report.claim = claim;
    std::vector<Outcome> outcomes;
    std::vector<std::string> names;
    if (claim == Claim::CmBipartite) {
        std::vector<CMBipartiteSpec> specs = opts.specs.empty() ? default_cm_specs() : opts.specs;
        outcomes = run_all(specs.size(), opts.threads, [&](std::size_t k) { return check_cm_bipartite(specs[k], opts); });
        for (const auto& spec : specs) names.push_back(format_cm_spec(spec));
    } else {
        std::vector<Graph> corpus = claim_corpus(claim, opts);
        auto check = [&](std::size_t k) -> Outcome {
            const Graph& g = corpus[k];
            switch (claim) {
                case Claim::NuBounds: return check_nu_bounds(g, opts);
                case Claim::BlockEquality: return check_block_equality(g, opts);
                case Claim::Closed: return check_closed(g, opts);
                case Claim::Forbidden: return check_forbidden(g, opts);
                case Claim::NoMultiarcs: return check_no_multiarcs(g, opts);
                case Claim::TwoBlock: return check_two_block(g, opts);
                case Claim::CompletionDescent: return check_completion_descent(g, opts);
                case Claim::CharProbe: return check_characteristic(g, opts);
                case Claim::CmBipartite: break;
            }
            return {};
        };
        outcomes = run_all(corpus.size(), opts.threads, check);
        for (const Graph& g : corpus) names.push_back(to_graph6(g));
    }
    report.checked = outcomes.size();
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        for (auto& [message, detail] : outcomes[k].failures)
            report.failures.push_back({k, names[k], message, std::move(detail)});
        for (auto& [message, detail] : outcomes[k].warnings)
            report.warnings.push_back({k, names[k], message, std::move(detail)});
        for (const auto& [key, count] : outcomes[k].counters) report.counters[key] += count;
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

namespace {

json cases_json(const std::vector<CaseResult>& cases) {
    json out = json::array();
    for (const auto& c : cases) {
        json item = {{"index", c.index}, {"case", c.graph6}, {"message", c.message}};
        if (!c.detail.is_null()) item["detail"] = c.detail;
        out.push_back(item);
    }
    return out;
}

}  // namespace

json to_json(const VerifyReport& report) {
    return {{"claim", std::string(claim_name(report.claim))},
            {"checked", report.checked},
            {"ok", report.ok()},
            {"failures", cases_json(report.failures)},
            {"warnings", cases_json(report.warnings)},
            {"counters", report.counters},
            {"seconds", report.seconds}};
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    out << claim_name(report.claim) << ": " << (report.ok() ? "pass" : "FAIL") << "  checked " << report.checked
        << "  failures " << report.failures.size() << "  warnings " << report.warnings.size() << "  ("
        << static_cast<long>(report.seconds * 1000) << " ms)\n";
    for (const auto& [key, count] : report.counters) out << "  " << key << ": " << count << '\n';
    for (const auto& c : report.failures) out << "  failure #" << c.index << " [" << c.graph6 << "] " << c.message << '\n';
    for (const auto& c : report.warnings) out << "  warning #" << c.index << " [" << c.graph6 << "] " << c.message << '\n';
    return out.str();
}

GraphReport report_graph(const Graph& g, const ReportOptions& opts) {
    GraphReport r;
    r.longest_path = longest_induced_path(g);
    r.ell = std::max(0, longest_induced_path_length(g));
    bool block = is_block_graph(g);
    if (block) r.cliques = structure_predicates(g).clique_count;
    else r.omitted["c"] = "not a block graph";

    NuOptions nu_opts;
    if (block && g.order() <= opts.max_nu_block_vertices) {
        nu_opts.method = NuMethod::Block;
        nu_opts.max_vertices = opts.max_nu_block_vertices;
    } else {
        nu_opts.max_vertices = opts.max_nu_vertices;
    }
    if (g.order() <= nu_opts.max_vertices) {
        NuResult res = nu(g, nu_opts);
        r.nu = res.value;
        r.nu_certificate = res.certificate;
    } else {
        r.omitted["nu"] = "more than " + std::to_string(nu_opts.max_vertices) + " vertices";
    }

    try {
        HochsterOptions h;
        h.characteristic = opts.characteristic;
        h.max_variables = opts.max_variables;
        r.reg = reg_binomial_edge(g, h);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        r.omitted["reg"] = e.what();
    }

    if (g.order() <= opts.max_closed_vertices) {
        r.closed_searched = true;
        r.closed_labeling = find_closed_labeling(g);
    } else {
        r.omitted["closed_labeling"] = "more than " + std::to_string(opts.max_closed_vertices) + " vertices";
    }
    return r;
}

json to_json(const GraphReport& r) {
    json out = {{"ell", r.ell}, {"longest_induced_path", vertices_json(r.longest_path)}};
    if (r.nu) {
        out["nu"] = *r.nu;
        out["nu_certificate"] = to_json(*r.nu_certificate);
    }
    if (r.reg) out["reg"] = *r.reg;
    if (r.cliques) out["c"] = *r.cliques;
    if (r.closed_searched) out["closed_labeling"] = r.closed_labeling ? labeling_json(*r.closed_labeling) : json(nullptr);
    if (!r.omitted.empty()) out["omitted"] = r.omitted;
    return out;
}

std::string format_graph_report(const GraphReport& r) {
    std::ostringstream out;
    auto line = [&](std::string_view key) -> std::ostream& { return out << key << std::string(8 - key.size(), ' '); };
    line("ell") << r.ell << '\n';
    if (r.nu) line("nu") << *r.nu << '\n';
    if (r.reg) line("reg") << *r.reg << '\n';
    if (r.cliques) line("c") << *r.cliques << '\n';
    if (r.closed_searched) {
        line("closed");
        if (r.closed_labeling) {
            for (std::size_t k = 0; k < r.closed_labeling->size(); ++k) out << (k ? " " : "") << (*r.closed_labeling)[k];
        } else {
            out << "none";
        }
        out << '\n';
    }
    for (const auto& [field, reason] : r.omitted) out << "omitted " << field << ": " << reason << '\n';
    return out.str();
}

}  // namespace nureg
