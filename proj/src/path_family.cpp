#include "nureg/path_family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nureg/error.hpp"

namespace nureg {

OrientedPath OrientedPath::forward(VertexSequence seq) {
    OrientedPath p;
    p.start = seq.front();
    p.end = seq.back();
    p.vertices = std::move(seq);
    return p;
}

VertexSet OrientedPath::interior() const {
    VertexSet s;
    for (std::size_t k = 1; k + 1 < vertices.size(); ++k) s.insert(vertices[k]);
    return s;
}

OrientedPath OrientedPath::flipped() const {
    OrientedPath p = *this;
    std::swap(p.start, p.end);
    return p;
}

std::vector<Edge> OrientedPath::edges() const {
    std::vector<Edge> out;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k)
        out.emplace_back(std::min(vertices[k], vertices[k + 1]), std::max(vertices[k], vertices[k + 1]));
    return out;
}

VertexSet OrientedPathFamily::support() const {
    VertexSet s;
    for (const auto& p : paths) s |= p.vertex_set();
    return s;
}

int OrientedPathFamily::total_edges() const {
    int t = 0;
    for (const auto& p : paths) t += p.edge_count();
    return t;
}

VertexSet validate_family(const Graph& g, const OrientedPathFamily& fam) {
    VertexSet seen;
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < fam.size(); ++i) {
        const OrientedPath& p = fam.paths[i];
        if (!is_induced_path(g, p.vertices))
            throw Error(ErrorCode::NotInduced, "path " + std::to_string(i + 1) + " is not an induced path", {i});
        for (Vertex v : p.vertices) {
            if (owner[v] >= 0)
                throw Error(ErrorCode::NotDisjoint,
                            "paths " + std::to_string(owner[v] + 1) + " and " + std::to_string(i + 1) + " share a vertex",
                            {owner[v], i});
            owner[v] = i;
        }
        Vertex a = p.vertices.front();
        Vertex b = p.vertices.back();
        bool ok = (p.start == a && p.end == b) || (p.start == b && p.end == a);
        if (!ok)
            throw Error(ErrorCode::BadOrientation,
                        "orientation of path " + std::to_string(i + 1) + " does not match its endpoints", {i});
        seen |= p.vertex_set();
    }
    if (fam.order) {
        std::vector<int> sorted = *fam.order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ident(static_cast<std::size_t>(fam.size()));
        std::iota(ident.begin(), ident.end(), 0);
        if (sorted != ident) throw Error(ErrorCode::BadOrder, "order is not a permutation of the paths");
    }
    return seen;
}

std::vector<Edge> induced_edges(const Graph& g, const OrientedPathFamily& fam) {
    validate_family(g, fam);
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < fam.size(); ++i)
        for (Vertex v : fam.paths[i].vertices) owner[v] = i;
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) out.emplace_back(u, v);
    return out;
}

OrientedPathFamily canonical_family(const OrientedPathFamily& fam) {
    std::vector<int> idx(static_cast<std::size_t>(fam.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return fam.paths[a].vertex_set().min() < fam.paths[b].vertex_set().min();
    });
    std::vector<int> new_index(idx.size());
    OrientedPathFamily out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        new_index[idx[k]] = static_cast<int>(k);
        out.paths.push_back(fam.paths[idx[k]]);
    }
    if (fam.order) {
        std::vector<int> order;
        for (int i : *fam.order) order.push_back(new_index[i]);
        out.order = order;
    }
    return out;
}

namespace {

std::vector<int> read_ints(const std::string& text, int lineno) {
    std::istringstream ss(text);
    std::vector<int> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

OrientedPathFamily parse_family(std::istream& in) {
    OrientedPathFamily fam;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.compare(first, 6, "sigma:") == 0) {
            std::vector<int> order;
            for (int i : read_ints(line.substr(first + 6), lineno)) order.push_back(i - 1);
            fam.order = order;
            continue;
        }
        auto bar = line.find('|');
        std::vector<int> seq = read_ints(line.substr(0, bar), lineno);
        if (seq.empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": empty path");
        VertexSequence vs;
        for (int v : seq) {
            if (v < 1) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": vertices are 1-based");
            vs.push_back(v - 1);
        }
        OrientedPath p = OrientedPath::forward(vs);
        if (bar != std::string::npos) {
            std::vector<int> ends = read_ints(line.substr(bar + 1), lineno);
            if (ends.size() != 2)
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'start end'");
            p.start = ends[0] - 1;
            p.end = ends[1] - 1;
        }
        fam.paths.push_back(std::move(p));
    }
    return fam;
}

OrientedPathFamily parse_family_string(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

std::string format_family(const OrientedPathFamily& fam) {
    std::ostringstream out;
    for (const auto& p : fam.paths) {
        for (std::size_t k = 0; k < p.vertices.size(); ++k) out << (k ? " " : "") << p.vertices[k] + 1;
        out << " | " << p.start + 1 << ' ' << p.end + 1 << '\n';
    }
    if (fam.order) {
        out << "sigma:";
        for (int i : *fam.order) out << ' ' << i + 1;
        out << '\n';
    }
    return out.str();
}

void for_each_family(const Graph& g, int max_paths, bool singletons,
                     const std::function<void(const OrientedPathFamily&)>& visit) {
    std::vector<VertexSequence> paths;
    std::vector<VertexSet> sets;
    for (auto& seq : enumerate_induced_paths(g)) {
        if (seq.size() == 1 && !singletons) continue;
        sets.push_back(vertex_set_of(seq));
        paths.push_back(std::move(seq));
    }
    OrientedPathFamily fam;
    auto extend = [&](auto&& self, std::size_t from, VertexSet used) -> void {
        for (std::size_t k = from; k < paths.size(); ++k) {
            if (sets[k].intersects(used)) continue;
            fam.paths.push_back(OrientedPath::forward(paths[k]));
            visit(fam);
            if (fam.size() < max_paths) self(self, k + 1, used | sets[k]);
            fam.paths.pop_back();
        }
    };
    extend(extend, 0, VertexSet{});
}

}  // namespace nureg
