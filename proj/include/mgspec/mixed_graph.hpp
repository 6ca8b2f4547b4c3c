#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mgspec {

using VertexPair = std::pair<int, int>;

// Mixed graph: undirected edges (multiset, loops allowed) plus arcs
// (multiset, directed loops allowed) on vertices 0..n-1.
struct MixedGraph {
    int n = 0;
    std::map<VertexPair, long long> edge_mult;  // key (i,j) with i <= j
    std::map<VertexPair, long long> arc_mult;   // key (tail, head)

    MixedGraph() = default;
    explicit MixedGraph(int n_) : n(n_) {
        if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    }

    void check_vertex(int u) const {
        if (u < 0 || u >= n) throw std::out_of_range("vertex index out of range");
    }

    void add_edge(int u, int v, long long mult = 1) {
        check_vertex(u);
        check_vertex(v);
        if (mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
        if (u > v) std::swap(u, v);
        edge_mult[{u, v}] += mult;
    }

    void add_arc(int u, int v, long long mult = 1) {
        check_vertex(u);
        check_vertex(v);
        if (mult <= 0) throw std::invalid_argument("arc multiplicity must be positive");
        arc_mult[{u, v}] += mult;
    }

    long long edges_between(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_mult.find({u, v});
        return it == edge_mult.end() ? 0 : it->second;
    }

    long long arcs_between(int u, int v) const {
        auto it = arc_mult.find({u, v});
        return it == arc_mult.end() ? 0 : it->second;
    }

    long long loops_at(int u) const { return edges_between(u, u); }
    long long directed_loops_at(int u) const { return arcs_between(u, u); }

    bool operator==(const MixedGraph&) const = default;
};

struct DegreeProfile {
    long long d = 0;        // undirected degree, loops count twice
    long long d_plus = 0;   // out-degree, directed loops included
    long long d_minus = 0;  // in-degree, directed loops included
    long long loops = 0;
};

struct GraphCounts {
    long long e = 0;  // edges excluding loops
    long long a = 0;  // arcs including directed loops
    long long l = 0;  // loops
};

inline DegreeProfile degree_profile(const MixedGraph& g, int u) {
    g.check_vertex(u);
    DegreeProfile p;
    for (const auto& [key, m] : g.edge_mult) {
        if (key.first == u && key.second == u) {
            p.d += 2 * m;
            p.loops += m;
        } else if (key.first == u || key.second == u) {
            p.d += m;
        }
    }
    for (const auto& [key, m] : g.arc_mult) {
        if (key.first == u) p.d_plus += m;
        if (key.second == u) p.d_minus += m;
    }
    return p;
}

inline std::vector<DegreeProfile> degree_profiles(const MixedGraph& g) {
    std::vector<DegreeProfile> out(g.n);
    for (const auto& [key, m] : g.edge_mult) {
        if (key.first == key.second) {
            out[key.first].d += 2 * m;
            out[key.first].loops += m;
        } else {
            out[key.first].d += m;
            out[key.second].d += m;
        }
    }
    for (const auto& [key, m] : g.arc_mult) {
        out[key.first].d_plus += m;
        out[key.second].d_minus += m;
    }
    return out;
}

inline GraphCounts counts(const MixedGraph& g) {
    GraphCounts c;
    for (const auto& [key, m] : g.edge_mult) {
        if (key.first == key.second)
            c.l += m;
        else
            c.e += m;
    }
    for (const auto& [key, m] : g.arc_mult) c.a += m;
    return c;
}

inline bool is_plain(const MixedGraph& g) {
    for (const auto& [key, m] : g.edge_mult)
        if (m > 1) return false;
    for (const auto& [key, m] : g.arc_mult)
        if (m > 1) return false;
    return true;
}

inline bool is_loopless(const MixedGraph& g) {
    for (const auto& [key, m] : g.edge_mult)
        if (key.first == key.second) return false;
    return true;
}

inline bool has_directed_loops(const MixedGraph& g) {
    for (const auto& [key, m] : g.arc_mult)
        if (key.first == key.second) return true;
    return false;
}

// Simple: plain, no loops, no directed loops.
inline bool is_simple(const MixedGraph& g) {
    return is_plain(g) && is_loopless(g) && !has_directed_loops(g);
}

struct Regularity {
    std::optional<long long> r;  // r-regular: d+ = d- and d + d+ = r everywhere
    std::optional<std::pair<long long, long long>> rs;  // d = r, d+ = d- = s everywhere
};

inline Regularity regularity(const MixedGraph& g) {
    if (g.n < 1) throw std::invalid_argument("regularity needs at least one vertex");
    auto degs = degree_profiles(g);
    Regularity out;
    bool r_ok = true;
    bool rs_ok = true;
    long long r = degs[0].d + degs[0].d_plus;
    long long rr = degs[0].d;
    long long ss = degs[0].d_plus;
    for (const auto& p : degs) {
        if (p.d_plus != p.d_minus || p.d + p.d_plus != r) r_ok = false;
        if (p.d != rr || p.d_plus != ss || p.d_minus != ss) rs_ok = false;
    }
    if (r_ok) out.r = r;
    if (rs_ok) out.rs = std::make_pair(rr, ss);
    return out;
}

enum class FamilyKind {
    complete,                    // K_n, edges only
    directed_complete,           // K^D_n: arcs both ways, no edges
    mixed_complete,              // K^M_n: edge plus arcs both ways per pair
    complete_multipartite,       // K_{k(m)}
    directed_multipartite,       // K^D_{k(m)}
    mixed_multipartite,          // K^M_{k(m)}
    path,                        // P_n
    cycle,                       // C_n
    oriented_path_same,          // P_n with all arcs forward
    oriented_cycle_same,         // C_n with all arcs in one rotational direction
    oriented_cycle_alternating,  // C_n, even n, directions alternate
    alternating_closed,          // path plus a directed loop at both ends
    empty,
};

namespace detail {

inline void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline MixedGraph multipartite(int k, int m, bool edges, bool arcs) {
    require(k >= 2 && m >= 1, "multipartite family needs k >= 2, m >= 1");
    MixedGraph g(k * m);
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (u / m == v / m) continue;
            if (edges) g.add_edge(u, v);
            if (arcs) {
                g.add_arc(u, v);
                g.add_arc(v, u);
            }
        }
    }
    return g;
}

}  // namespace detail

// params: most kinds take {n}; multipartite kinds take {k, m}.
inline MixedGraph family(FamilyKind kind, const std::vector<long long>& params) {
    using detail::require;
    auto p1 = [&](long long lo) {
        require(params.size() == 1, "family expects one parameter");
        require(params[0] >= lo, "family parameter too small");
        return static_cast<int>(params[0]);
    };
    switch (kind) {
        case FamilyKind::empty:
            return MixedGraph(p1(0));
        case FamilyKind::complete: {
            int n = p1(1);
            MixedGraph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case FamilyKind::directed_complete: {
            int n = p1(1);
            MixedGraph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v) g.add_arc(u, v);
            return g;
        }
        case FamilyKind::mixed_complete: {
            int n = p1(1);
            MixedGraph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    g.add_edge(u, v);
                    g.add_arc(u, v);
                    g.add_arc(v, u);
                }
            return g;
        }
        case FamilyKind::complete_multipartite:
        case FamilyKind::directed_multipartite:
        case FamilyKind::mixed_multipartite: {
            require(params.size() == 2, "multipartite family expects parameters k m");
            int k = static_cast<int>(params[0]);
            int m = static_cast<int>(params[1]);
            bool edges = kind != FamilyKind::directed_multipartite;
            bool arcs = kind != FamilyKind::complete_multipartite;
            return detail::multipartite(k, m, edges, arcs);
        }
        case FamilyKind::path: {
            int n = p1(1);
            MixedGraph g(n);
            for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
            return g;
        }
        case FamilyKind::cycle: {
            int n = p1(3);
            MixedGraph g(n);
            for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
            return g;
        }
        case FamilyKind::oriented_path_same: {
            int n = p1(2);
            MixedGraph g(n);
            for (int u = 0; u + 1 < n; ++u) g.add_arc(u, u + 1);
            return g;
        }
        case FamilyKind::oriented_cycle_same: {
            int n = p1(3);
            MixedGraph g(n);
            for (int u = 0; u < n; ++u) g.add_arc(u, (u + 1) % n);
            return g;
        }
        case FamilyKind::oriented_cycle_alternating: {
            int n = p1(4);
            require(n % 2 == 0, "alternating orientation needs even cycle length");
            MixedGraph g(n);
            for (int u = 0; u < n; ++u) {
                int v = (u + 1) % n;
                if (u % 2 == 0)
                    g.add_arc(u, v);
                else
                    g.add_arc(v, u);
            }
            return g;
        }
        case FamilyKind::alternating_closed: {
            // P_n with one directed loop at each end vertex; the double cover
            // of this graph is a cycle of length 2n.
            int n = p1(2);
            MixedGraph g(n);
            for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
            g.add_arc(0, 0);
            g.add_arc(n - 1, n - 1);
            return g;
        }
    }
    throw std::invalid_argument("unknown family kind");
}

struct RandomFlags {
    bool simple = false;
    bool loopless = false;
    bool plain = false;
};

namespace detail {

inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline long long rand_mult(std::mt19937_64& rng, long long cap) {
    if (cap <= 1) return 1;
    return 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(cap));
}

}  // namespace detail

inline MixedGraph random_mixed(std::uint64_t seed, int n, long long max_edge_mult,
                               long long max_arc_mult, double density,
                               RandomFlags flags = {}) {
    detail::require(n >= 1, "random graph needs n >= 1");
    detail::require(density >= 0.0 && density <= 1.0, "density must lie in [0,1]");
    detail::require(max_edge_mult >= 1 && max_arc_mult >= 1,
                    "multiplicity caps must be at least 1");
    if (flags.simple && (max_edge_mult > 1 || max_arc_mult > 1))
        throw std::invalid_argument("simple flag contradicts multiplicity caps above 1");
    bool plain = flags.plain || flags.simple;
    bool loopless = flags.loopless || flags.simple;
    bool dloops_ok = !flags.simple;
    std::mt19937_64 rng(seed);
    MixedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::rand_unit(rng) < density)
                g.add_edge(u, v, plain ? 1 : detail::rand_mult(rng, max_edge_mult));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (detail::rand_unit(rng) < density)
                g.add_arc(u, v, plain ? 1 : detail::rand_mult(rng, max_arc_mult));
        }
    for (int u = 0; u < n; ++u) {
        if (!loopless && detail::rand_unit(rng) < density * 0.5)
            g.add_edge(u, u, plain ? 1 : detail::rand_mult(rng, max_edge_mult));
        if (dloops_ok && detail::rand_unit(rng) < density * 0.5)
            g.add_arc(u, u, plain ? 1 : detail::rand_mult(rng, max_arc_mult));
    }
    return g;
}

// Multiset union on a common vertex set; multiplicities add.
inline MixedGraph graph_union(const MixedGraph& g1, const MixedGraph& g2) {
    detail::require(g1.n == g2.n, "union requires identical vertex sets");
    MixedGraph g = g1;
    for (const auto& [key, m] : g2.edge_mult) g.edge_mult[key] += m;
    for (const auto& [key, m] : g2.arc_mult) g.arc_mult[key] += m;
    return g;
}

// Checked-disjoint union: shared edge or arc keys are rejected.
inline MixedGraph oplus(const MixedGraph& g1, const MixedGraph& g2) {
    detail::require(g1.n == g2.n, "oplus requires identical vertex sets");
    for (const auto& [key, m] : g2.edge_mult)
        if (g1.edge_mult.count(key))
            throw std::invalid_argument("oplus operands share an edge");
    for (const auto& [key, m] : g2.arc_mult)
        if (g1.arc_mult.count(key))
            throw std::invalid_argument("oplus operands share an arc");
    return graph_union(g1, g2);
}

// Splits g into its undirected part and its directed part.
inline std::pair<MixedGraph, MixedGraph> factorize(const MixedGraph& g) {
    MixedGraph gu(g.n), gd(g.n);
    gu.edge_mult = g.edge_mult;
    gd.arc_mult = g.arc_mult;
    return {gu, gd};
}

inline MixedGraph delete_arc(const MixedGraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    MixedGraph out = g;
    auto it = out.arc_mult.find({u, v});
    if (it == out.arc_mult.end()) throw std::invalid_argument("arc not present");
    if (--it->second == 0) out.arc_mult.erase(it);
    return out;
}

inline MixedGraph delete_vertices(const MixedGraph& g, const std::vector<int>& drop) {
    std::vector<bool> gone(g.n, false);
    for (int u : drop) {
        g.check_vertex(u);
        gone[u] = true;
    }
    std::vector<int> remap(g.n, -1);
    int kept = 0;
    for (int u = 0; u < g.n; ++u)
        if (!gone[u]) remap[u] = kept++;
    MixedGraph out(kept);
    for (const auto& [key, m] : g.edge_mult)
        if (!gone[key.first] && !gone[key.second])
            out.add_edge(remap[key.first], remap[key.second], m);
    for (const auto& [key, m] : g.arc_mult)
        if (!gone[key.first] && !gone[key.second])
            out.add_arc(remap[key.first], remap[key.second], m);
    return out;
}

// Merges v into u. Edges between u and v become loops, arcs between them
// become directed loops. Vertices above v shift down by one.
inline MixedGraph identify_vertices(const MixedGraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    detail::require(u != v, "identify needs two distinct vertices");
    auto remap = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    MixedGraph out(g.n - 1);
    for (const auto& [key, m] : g.edge_mult)
        out.add_edge(remap(key.first), remap(key.second), m);
    for (const auto& [key, m] : g.arc_mult)
        out.add_arc(remap(key.first), remap(key.second), m);
    return out;
}

}  // namespace mgspec
