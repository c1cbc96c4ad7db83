#include "nureg/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "nureg/error.hpp"

namespace nureg {

namespace {

bool skippable(const std::string& line) {
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    int m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream ls(line);
        int a = 0;
        int b = 0;
        if (!(ls >> a >> b))
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected two integers");
        std::string extra;
        if (ls >> extra) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing text");
        if (n < 0) {
            n = a;
            m = b;
            if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative header values");
        } else {
            edges.emplace_back(a, b);
        }
    }
    if (n < 0) throw Error(ErrorCode::ParseError, "missing header line");
    if (static_cast<int>(edges.size()) != m)
        throw Error(ErrorCode::ParseError,
                    "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "invalid graph6 character");
    int n = text[0] - 63;
    std::size_t pos = 1;
    if (n == 63) throw Error(ErrorCode::TooLarge, "graph6 strings above 62 vertices are not supported");
    Graph g(n);
    std::size_t needed = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (text.size() - pos != needed) throw Error(ErrorCode::ParseError, "graph6 string has wrong length");
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int word = text[pos + bit / 6] - 63;
            if ((word >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw Error(ErrorCode::TooLarge, "graph6 output above 62 vertices is not supported");
    std::string out(1, static_cast<char>(n + 63));
    int word = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    std::istringstream lines(content);
    std::string first;
    while (std::getline(lines, first) && skippable(first)) {
    }
    std::istringstream probe(first);
    int a = 0;
    int b = 0;
    if (probe >> a >> b) {
        std::istringstream whole(content);
        return {read_edge_list(whole)};
    }
    std::vector<Graph> graphs;
    std::istringstream all(content);
    std::string line;
    while (std::getline(all, line)) {
        if (skippable(line)) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

}  // namespace nureg
