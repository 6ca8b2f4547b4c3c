#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "associated_graph.hpp"
#include "mixed_graph.hpp"

namespace mgspec {

// Dense symmetric matrix of order 2n. integer_exact marks matrices whose
// entries are exact integers stored in doubles.
struct SymMatrix {
    int order = 0;
    std::vector<double> a;
    bool integer_exact = false;

    SymMatrix() = default;
    SymMatrix(int order_, bool exact) : order(order_), integer_exact(exact) {
        a.assign(static_cast<size_t>(order_) * order_, 0.0);
    }

    double at(int i, int j) const { return a[static_cast<size_t>(i) * order + j]; }
    double& at(int i, int j) { return a[static_cast<size_t>(i) * order + j]; }

    long long iat(int i, int j) const {
        if (!integer_exact) throw std::logic_error("matrix is not integer exact");
        return std::llround(at(i, j));
    }

    long long exact_trace() const {
        long long t = 0;
        for (int i = 0; i < order; ++i) t += iat(i, i);
        return t;
    }

    double trace() const {
        double t = 0;
        for (int i = 0; i < order; ++i) t += at(i, i);
        return t;
    }

    double fro_norm() const {
        double s = 0;
        for (double x : a) s += x * x;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0;
        for (double x : a) m = std::max(m, std::fabs(x));
        return m;
    }

    std::string to_csv() const {
        std::string out;
        char buf[64];
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                if (j) out += ',';
                if (integer_exact)
                    std::snprintf(buf, sizeof buf, "%lld", iat(i, j));
                else
                    std::snprintf(buf, sizeof buf, "%.17g", at(i, j));
                out += buf;
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["order"] = order;
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < order; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int jj = 0; jj < order; ++jj) {
                if (integer_exact)
                    row.push_back(iat(i, jj));
                else
                    row.push_back(at(i, jj));
            }
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        return j;
    }
};

inline SymMatrix mat_add(const SymMatrix& x, const SymMatrix& y) {
    if (x.order != y.order) throw std::invalid_argument("order mismatch");
    SymMatrix out(x.order, x.integer_exact && y.integer_exact);
    for (size_t k = 0; k < out.a.size(); ++k) out.a[k] = x.a[k] + y.a[k];
    return out;
}

inline SymMatrix mat_sub(const SymMatrix& x, const SymMatrix& y) {
    if (x.order != y.order) throw std::invalid_argument("order mismatch");
    SymMatrix out(x.order, x.integer_exact && y.integer_exact);
    for (size_t k = 0; k < out.a.size(); ++k) out.a[k] = x.a[k] - y.a[k];
    return out;
}

inline double max_abs_diff(const SymMatrix& x, const SymMatrix& y) {
    if (x.order != y.order) throw std::invalid_argument("order mismatch");
    double m = 0;
    for (size_t k = 0; k < x.a.size(); ++k) m = std::max(m, std::fabs(x.a[k] - y.a[k]));
    return m;
}

// Rows and columns indexed v'_1..v'_n, v''_1..v''_n.
inline SymMatrix integrated_adjacency(const MixedGraph& g) {
    int n = g.n;
    SymMatrix m(2 * n, true);
    for (const auto& [key, mult] : g.edge_mult) {
        auto [i, j] = key;
        if (i == j) {
            m.at(i, i) += 2.0 * mult;
            m.at(n + i, n + i) += 2.0 * mult;
        } else {
            m.at(i, j) += mult;
            m.at(j, i) += mult;
            m.at(n + i, n + j) += mult;
            m.at(n + j, n + i) += mult;
        }
    }
    for (const auto& [key, mult] : g.arc_mult) {
        auto [i, j] = key;
        m.at(i, n + j) += mult;
        m.at(n + j, i) += mult;
    }
    return m;
}

inline SymMatrix integrated_degree(const MixedGraph& g) {
    int n = g.n;
    SymMatrix m(2 * n, true);
    auto degs = degree_profiles(g);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = static_cast<double>(degs[i].d + degs[i].d_plus);
        m.at(n + i, n + i) = static_cast<double>(degs[i].d + degs[i].d_minus);
    }
    return m;
}

inline SymMatrix integrated_laplacian(const MixedGraph& g) {
    return mat_sub(integrated_degree(g), integrated_adjacency(g));
}

inline SymMatrix integrated_signless(const MixedGraph& g) {
    return mat_add(integrated_degree(g), integrated_adjacency(g));
}

// Entrywise definition; rows with zero associated degree stay zero except
// that their diagonal entry is zero as well.
inline SymMatrix integrated_normalized(const MixedGraph& g) {
    int n = g.n;
    SymMatrix m(2 * n, false);
    auto degs = degree_profiles(g);
    auto dp = [&](int i) { return static_cast<double>(degs[i].d + degs[i].d_plus); };
    auto dm = [&](int i) { return static_cast<double>(degs[i].d + degs[i].d_minus); };
    for (int i = 0; i < n; ++i) {
        if (degs[i].d + degs[i].d_plus != 0)
            m.at(i, i) = 1.0 - 2.0 * static_cast<double>(degs[i].loops) / dp(i);
        if (degs[i].d + degs[i].d_minus != 0)
            m.at(n + i, n + i) = 1.0 - 2.0 * static_cast<double>(degs[i].loops) / dm(i);
    }
    for (const auto& [key, mult] : g.edge_mult) {
        auto [i, j] = key;
        if (i == j) continue;
        double b = static_cast<double>(mult);
        m.at(i, j) = m.at(j, i) = -b / std::sqrt(dp(i) * dp(j));
        m.at(n + i, n + j) = m.at(n + j, n + i) = -b / std::sqrt(dm(i) * dm(j));
    }
    for (const auto& [key, mult] : g.arc_mult) {
        auto [i, j] = key;
        double c = static_cast<double>(mult);
        m.at(i, n + j) = m.at(n + j, i) = -c / std::sqrt(dp(i) * dm(j));
    }
    return m;
}

// D^{-1/2} L D^{-1/2}; only defined when every associated degree is positive.
inline SymMatrix normalized_sandwich(const MixedGraph& g) {
    SymMatrix d = integrated_degree(g);
    SymMatrix l = integrated_laplacian(g);
    std::vector<double> inv_sqrt(d.order);
    for (int i = 0; i < d.order; ++i) {
        if (d.iat(i, i) == 0)
            throw std::invalid_argument("sandwich form undefined with trivial components");
        inv_sqrt[i] = 1.0 / std::sqrt(d.at(i, i));
    }
    SymMatrix out(l.order, false);
    for (int i = 0; i < l.order; ++i)
        for (int j = 0; j < l.order; ++j)
            out.at(i, j) = inv_sqrt[i] * l.at(i, j) * inv_sqrt[j];
    return out;
}

// Mixed volume: vl(S) = sum over S of 2d + d+ + d-.
inline long long vl(const MixedGraph& g, const std::vector<int>& S) {
    auto degs = degree_profiles(g);
    long long out = 0;
    for (int v : S) {
        g.check_vertex(v);
        out += 2 * degs[v].d + degs[v].d_plus + degs[v].d_minus;
    }
    return out;
}

// Edges {u,v} with one endpoint in X and the other in Y, each counted once.
inline long long e_between(const MixedGraph& g, const std::vector<int>& X,
                           const std::vector<int>& Y) {
    std::vector<bool> in_x(g.n, false), in_y(g.n, false);
    for (int v : X) {
        g.check_vertex(v);
        in_x[v] = true;
    }
    for (int v : Y) {
        g.check_vertex(v);
        in_y[v] = true;
    }
    long long out = 0;
    for (const auto& [key, mult] : g.edge_mult) {
        auto [i, j] = key;
        if ((in_x[i] && in_y[j]) || (in_x[j] && in_y[i])) out += mult;
    }
    return out;
}

// Arcs (u,v) with tail in X and head in Y.
inline long long a_between(const MixedGraph& g, const std::vector<int>& X,
                           const std::vector<int>& Y) {
    std::vector<bool> in_x(g.n, false), in_y(g.n, false);
    for (int v : X) {
        g.check_vertex(v);
        in_x[v] = true;
    }
    for (int v : Y) {
        g.check_vertex(v);
        in_y[v] = true;
    }
    long long out = 0;
    for (const auto& [key, mult] : g.arc_mult) {
        auto [i, j] = key;
        if (in_x[i] && in_y[j]) out += mult;
    }
    return out;
}

// Ordered pairing over both copies of X against both copies of Y in the
// double cover: sum of adjacency entries A(x, y).
inline long long assoc_pairing(const MixedGraph& g, const AssociatedGraph& a,
                               const std::vector<int>& X, const std::vector<int>& Y) {
    long long out = 0;
    for (int x : X) {
        g.check_vertex(x);
        for (int y : Y) {
            g.check_vertex(y);
            out += a.at(x, y) + a.at(x, g.n + y) + a.at(g.n + x, y) + a.at(g.n + x, g.n + y);
        }
    }
    return out;
}

}  // namespace mgspec
