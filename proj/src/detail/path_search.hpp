#pragma once

#include <vector>

#include "nureg/graph.hpp"

namespace nureg::detail {

enum class Step { Extend, Prune, Stop };

// Partial induced path maintained by the depth-first search. `blocked` holds
// the closed neighbourhoods of every path vertex except the last one, so a
// vertex may be appended exactly when it neighbours the last vertex and lies
// outside `blocked`.
struct PathState {
    VertexSequence seq;
    VertexSet members;
    VertexSet blocked;
};

template <class Visit>
bool extend_induced(const Graph& g, VertexSet allowed, PathState& st, Visit& visit) {
    Vertex last = st.seq.back();
    VertexSet next = (g.neighbors(last) & allowed) - st.blocked - st.members;
    if (next.empty()) return false;
    VertexSet old_blocked = st.blocked;
    st.blocked |= g.neighbors(last);
    st.blocked.insert(last);
    bool stopped = false;
    for (Vertex v : next) {
        st.seq.push_back(v);
        st.members.insert(v);
        Step s = visit(static_cast<const PathState&>(st));
        if (s == Step::Stop) {
            stopped = true;
        } else if (s == Step::Extend) {
            stopped = extend_induced(g, allowed, st, visit);
        }
        st.members.erase(v);
        st.seq.pop_back();
        if (stopped) break;
    }
    st.blocked = old_blocked;
    return stopped;
}

// Visits every induced path of g[allowed] starting at `start`, in
// lexicographic order of vertex sequences. The visitor decides whether each
// path is extended further. Returns true when the visitor stopped the search.
template <class Visit>
bool for_each_induced_path_from(const Graph& g, VertexSet allowed, Vertex start, Visit&& visit) {
    PathState st;
    st.seq.push_back(start);
    st.members.insert(start);
    Step s = visit(static_cast<const PathState&>(st));
    if (s == Step::Stop) return true;
    if (s == Step::Prune) return false;
    return extend_induced(g, allowed, st, visit);
}

// Induced paths of g[allowed] from s to t (s != t), in lexicographic order.
template <class Visit>
bool for_each_induced_path_between(const Graph& g, VertexSet allowed, Vertex s, Vertex t, Visit&& visit) {
    return for_each_induced_path_from(g, allowed, s, [&](const PathState& st) {
        Vertex last = st.seq.back();
        if (last == t) return visit(st) == Step::Stop ? Step::Stop : Step::Prune;
        if (st.blocked.contains(t)) return Step::Prune;
        return Step::Extend;
    });
}

}  // namespace nureg::detail
