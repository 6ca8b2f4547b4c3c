#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mixed_graph.hpp"

namespace mgspec {

// Double cover of a mixed graph on associated vertices
// v'_1..v'_n, v''_1..v''_n (indices 0..n-1 and n..2n-1).
// Diagonal entries follow the adjacency convention: 2 per loop.
struct AssociatedGraph {
    int n_mixed = 0;
    int order = 0;
    std::vector<long long> adj;

    long long at(int i, int j) const { return adj[static_cast<size_t>(i) * order + j]; }
    long long& at(int i, int j) { return adj[static_cast<size_t>(i) * order + j]; }

    std::vector<long long> degrees() const {
        std::vector<long long> d(order, 0);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) d[i] += at(i, j);
        return d;
    }
};

inline AssociatedGraph build_associated(const MixedGraph& g) {
    AssociatedGraph a;
    a.n_mixed = g.n;
    a.order = 2 * g.n;
    a.adj.assign(static_cast<size_t>(a.order) * a.order, 0);
    int n = g.n;
    for (const auto& [key, m] : g.edge_mult) {
        auto [i, j] = key;
        if (i == j) {
            a.at(i, i) += 2 * m;
            a.at(n + i, n + i) += 2 * m;
        } else {
            a.at(i, j) += m;
            a.at(j, i) += m;
            a.at(n + i, n + j) += m;
            a.at(n + j, n + i) += m;
        }
    }
    for (const auto& [key, m] : g.arc_mult) {
        auto [i, j] = key;
        a.at(i, n + j) += m;
        a.at(n + j, i) += m;
    }
    return a;
}

struct ComponentInfo {
    std::vector<int> vertices;
    bool trivial = false;
    bool bipartite = false;
    bool is_path = false;
};

struct ComponentReport {
    std::vector<ComponentInfo> components;
    std::vector<int> component_of;
    int n_trivial = 0;
};

inline ComponentReport analyze_components(const AssociatedGraph& a) {
    ComponentReport rep;
    rep.component_of.assign(a.order, -1);
    std::vector<int> color(a.order, -1);
    for (int s = 0; s < a.order; ++s) {
        if (rep.component_of[s] != -1) continue;
        int id = static_cast<int>(rep.components.size());
        ComponentInfo info;
        bool bip = true;
        std::deque<int> queue{s};
        rep.component_of[s] = id;
        color[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            info.vertices.push_back(u);
            if (a.at(u, u) > 0) bip = false;
            for (int v = 0; v < a.order; ++v) {
                if (v == u || a.at(u, v) == 0) continue;
                if (rep.component_of[v] == -1) {
                    rep.component_of[v] = id;
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    bip = false;
                }
            }
        }
        std::sort(info.vertices.begin(), info.vertices.end());
        long long edge_pairs = 0;   // distinct adjacent pairs inside the component
        long long multi = 0;
        long long loops = 0;
        int deg1 = 0;
        bool deg_ok = true;
        for (int u : info.vertices) {
            long long du = 0;
            if (a.at(u, u) > 0) ++loops;
            for (int v : info.vertices) du += a.at(u, v);
            if (du > 2) deg_ok = false;
            if (du == 1) ++deg1;
            for (int v : info.vertices)
                if (v > u && a.at(u, v) > 0) {
                    ++edge_pairs;
                    if (a.at(u, v) > 1) ++multi;
                }
        }
        size_t sz = info.vertices.size();
        info.trivial = sz == 1 && a.at(info.vertices[0], info.vertices[0]) == 0;
        info.bipartite = bip;
        if (info.trivial)
            info.is_path = true;
        else
            info.is_path = loops == 0 && multi == 0 && deg_ok && deg1 == 2 &&
                           edge_pairs + 1 == static_cast<long long>(sz);
        if (info.trivial) ++rep.n_trivial;
        rep.components.push_back(std::move(info));
    }
    return rep;
}

struct Predicates {
    bool uniconnected = false;
    bool has_AB = false;
    bool ap_all_components = false;
    bool plain = false;
    bool loopless = false;
    bool simple = false;
    bool directed_loop_complete = false;
    int n_AB_nontrivial_components = 0;
    int n_trivial_components = 0;
};

namespace detail {

inline bool associated_is_complete(const AssociatedGraph& a) {
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < a.order; ++j) {
            long long want = i == j ? 0 : 1;
            if (a.at(i, j) != want) return false;
        }
    return true;
}

inline bool structurally_directed_loop_complete(const MixedGraph& g) {
    for (int u = 0; u < g.n; ++u) {
        if (g.loops_at(u) != 0) return false;
        if (g.directed_loops_at(u) != 1) return false;
        for (int v = 0; v < g.n; ++v) {
            if (u == v) continue;
            if (g.edges_between(u, v) != 1) return false;
            if (g.arcs_between(u, v) != 1) return false;
        }
    }
    return true;
}

}  // namespace detail

inline Predicates predicates(const MixedGraph& g, const AssociatedGraph& a,
                             const ComponentReport& rep) {
    Predicates p;
    p.uniconnected = rep.components.size() == 1;
    p.has_AB = true;
    p.ap_all_components = true;
    for (const auto& c : rep.components) {
        if (!c.bipartite) p.has_AB = false;
        if (!c.is_path) p.ap_all_components = false;
        if (!c.trivial && c.bipartite) ++p.n_AB_nontrivial_components;
    }
    p.n_trivial_components = rep.n_trivial;
    p.plain = is_plain(g);
    p.loopless = is_loopless(g);
    p.simple = is_simple(g);
    p.directed_loop_complete = detail::structurally_directed_loop_complete(g);
    if (g.n > 0 && p.directed_loop_complete != detail::associated_is_complete(a))
        throw std::logic_error("directed-loop-complete checks disagree");
    return p;
}

inline Predicates predicates(const MixedGraph& g) {
    auto a = build_associated(g);
    auto rep = analyze_components(a);
    return predicates(g, a, rep);
}

// Unweighted shortest paths; multi-edges collapse to one step.
inline std::vector<std::optional<long long>> bfs_distances(const AssociatedGraph& a,
                                                           const std::vector<int>& sources) {
    std::vector<std::optional<long long>> dist(a.order);
    std::deque<int> queue;
    for (int s : sources) {
        if (s < 0 || s >= a.order) throw std::out_of_range("associated vertex out of range");
        if (!dist[s]) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < a.order; ++v) {
            if (v == u || a.at(u, v) == 0 || dist[v]) continue;
            dist[v] = *dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

struct MixedDistance {
    std::optional<long long> d1, d2, d3, d4;  // v'-v', v'-v'', v''-v', v''-v''
    std::optional<long long> d;               // min of the four; 0 on the diagonal
};

inline MixedDistance mixed_distance(const MixedGraph& g, const AssociatedGraph& a,
                                    int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    MixedDistance out;
    auto from_prime = bfs_distances(a, {u});
    auto from_double = bfs_distances(a, {g.n + u});
    out.d1 = from_prime[v];
    out.d2 = from_prime[g.n + v];
    out.d3 = from_double[v];
    out.d4 = from_double[g.n + v];
    if (u == v) {
        out.d = 0;
    } else {
        for (const auto& cand : {out.d1, out.d2, out.d3, out.d4})
            if (cand && (!out.d || *cand < *out.d)) out.d = cand;
    }
    return out;
}

inline MixedDistance mixed_distance(const MixedGraph& g, int u, int v) {
    return mixed_distance(g, build_associated(g), u, v);
}

inline std::optional<long long> set_distance(const MixedGraph& g, const AssociatedGraph& a,
                                             const std::vector<int>& X,
                                             const std::vector<int>& Y) {
    if (X.empty() || Y.empty()) throw std::invalid_argument("set distance needs non-empty sets");
    std::vector<int> sources;
    for (int x : X) {
        g.check_vertex(x);
        sources.push_back(x);
        sources.push_back(g.n + x);
    }
    auto dist = bfs_distances(a, sources);
    std::optional<long long> best;
    for (int y : Y) {
        g.check_vertex(y);
        for (int t : {y, g.n + y}) {
            if (dist[t] && (!best || *dist[t] < *best)) best = dist[t];
        }
    }
    return best;
}

inline std::optional<long long> set_distance(const MixedGraph& g, const std::vector<int>& X,
                                             const std::vector<int>& Y) {
    return set_distance(g, build_associated(g), X, Y);
}

// Second route to bipartiteness: DFS coloring plus explicit verification
// of every adjacent pair against the produced colors.
inline std::optional<std::vector<int>> bipartite_oracle(const AssociatedGraph& a) {
    std::vector<int> color(a.order, -1);
    for (int s = 0; s < a.order; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < a.order; ++v) {
                if (v == u || a.at(u, v) == 0) continue;
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                }
            }
        }
    }
    for (int i = 0; i < a.order; ++i) {
        if (a.at(i, i) > 0) return std::nullopt;
        for (int j = i + 1; j < a.order; ++j)
            if (a.at(i, j) > 0 && color[i] == color[j]) return std::nullopt;
    }
    return color;
}

}  // namespace mgspec
