#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "associated_graph.hpp"
#include "charpoly.hpp"
#include "closed_forms.hpp"
#include "eigen.hpp"
#include "matrices.hpp"
#include "mixed_graph.hpp"

namespace mgspec {

struct VerifyOptions {
    double tol_group = 1e-7;
    double tol_zero = 1e-8;
    double slack_tol = 1e-8;  // holds requires slack >= -slack_tol
    double eq_tol = 1e-7;     // |slack| below this counts as equality
    std::uint64_t seed = 0;
    int instantiations = 16;
    int charpoly_max_order = 64;
};

struct BoundReport {
    std::string bound_id;
    bool applicable = false;
    std::optional<double> lhs;
    std::optional<double> rhs;
    std::optional<double> slack;
    bool holds = true;  // vacuously true when not applicable
    std::string witness;
};

// Everything the checks share, computed once per graph.
struct EvalContext {
    MixedGraph g;
    VerifyOptions opt;
    AssociatedGraph assoc;
    ComponentReport comps;
    Predicates pred;
    GraphCounts cnt;
    std::vector<DegreeProfile> degs;
    Regularity reg;
    SymMatrix I, ID, IL, IQ, IN;
    EigenResult eigI, eigL, eigQ, eigN;
    long long Delta1 = 0, Delta2 = 0, delta1 = 0, delta2 = 0;

    explicit EvalContext(MixedGraph graph, VerifyOptions options = {})
        : g(std::move(graph)), opt(options) {
        assoc = build_associated(g);
        comps = analyze_components(assoc);
        pred = predicates(g, assoc, comps);
        cnt = counts(g);
        degs = degree_profiles(g);
        if (g.n >= 1) reg = regularity(g);
        I = integrated_adjacency(g);
        ID = integrated_degree(g);
        IL = integrated_laplacian(g);
        IQ = integrated_signless(g);
        IN = integrated_normalized(g);
        eigI = jacobi_eigen(I, opt.tol_group);
        eigL = jacobi_eigen(IL, opt.tol_group);
        eigQ = jacobi_eigen(IQ, opt.tol_group);
        eigN = jacobi_eigen(IN, opt.tol_group);
        if (g.n >= 1) {
            Delta1 = delta1 = degs[0].d + degs[0].d_plus;
            Delta2 = delta2 = degs[0].d + degs[0].d_minus;
            for (const auto& p : degs) {
                Delta1 = std::max(Delta1, p.d + p.d_plus);
                Delta2 = std::max(Delta2, p.d + p.d_minus);
                delta1 = std::min(delta1, p.d + p.d_plus);
                delta2 = std::min(delta2, p.d + p.d_minus);
            }
        }
    }

    int order() const { return 2 * g.n; }
    double nu(int i) const { return eigL.spectrum.values[i - 1]; }   // 1-based
    double xi(int i) const { return eigQ.spectrum.values[i - 1]; }
    double nh(int i) const { return eigN.spectrum.values[i - 1]; }
    double lam(int i) const { return eigI.spectrum.values[i - 1]; }

    // max over i != 2n of |1 - nh_i|
    double normalized_deviation() const {
        double m = 0;
        for (int i = 1; i <= order() - 1; ++i) m = std::max(m, std::fabs(1.0 - nh(i)));
        return m;
    }
};

namespace detail {

inline std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct Ineq {
    std::string label;
    double lhs, rhs;
};

inline BoundReport not_applicable(const std::string& id, const std::string& why) {
    BoundReport r;
    r.bound_id = id;
    r.applicable = false;
    r.holds = true;
    r.witness = why;
    return r;
}

inline BoundReport from_ineqs(const std::string& id, const std::vector<Ineq>& checks,
                              const VerifyOptions& opt, std::string witness,
                              bool extra_ok = true) {
    BoundReport r;
    r.bound_id = id;
    r.applicable = true;
    bool all_ok = extra_ok;
    bool first = true;
    double min_slack = 0;
    for (const auto& c : checks) {
        double s = c.rhs - c.lhs;
        if (first || s < min_slack) {
            min_slack = s;
            r.lhs = c.lhs;
            r.rhs = c.rhs;
            first = false;
        }
        if (s < -opt.slack_tol) {
            all_ok = false;
            witness += "; violated " + c.label + " (" + fmt(c.lhs) + " vs " + fmt(c.rhs) + ")";
        }
    }
    if (!first) r.slack = min_slack;
    r.holds = all_ok;
    r.witness = std::move(witness);
    return r;
}

// Equality-style report: deviation compared against zero.
inline BoundReport from_deviation(const std::string& id, double deviation, double tol,
                                  std::string witness, bool extra_ok = true) {
    BoundReport r;
    r.bound_id = id;
    r.applicable = true;
    r.lhs = deviation;
    r.rhs = 0.0;
    r.slack = -deviation;
    r.holds = extra_ok && deviation <= tol;
    r.witness = std::move(witness);
    return r;
}

inline BoundReport from_flag(const std::string& id, bool ok, std::string witness) {
    BoundReport r;
    r.bound_id = id;
    r.applicable = true;
    r.holds = ok;
    r.witness = std::move(witness);
    return r;
}

inline std::mt19937_64 bound_rng(const VerifyOptions& opt, std::uint64_t salt) {
    return std::mt19937_64(opt.seed * 0x9E3779B97F4A7C15ULL + salt + 1);
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int n) {
    for (int tries = 0; tries < 64; ++tries) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.push_back(v);
        if (!s.empty()) return s;
    }
    return {0};
}

inline double max_sorted_diff(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end(), std::greater<double>());
    std::sort(b.begin(), b.end(), std::greater<double>());
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

inline bool complement_disconnected(const AssociatedGraph& a) {
    int n = a.order;
    if (n <= 1) return false;
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (v != u && a.at(u, v) == 0 && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached < n;
}

inline bool associated_is_cycle(const AssociatedGraph& a, const ComponentReport& comps) {
    if (comps.components.size() != 1 || a.order < 3) return false;
    for (int i = 0; i < a.order; ++i) {
        if (a.at(i, i) != 0) return false;
        long long deg = 0;
        for (int j = 0; j < a.order; ++j) {
            if (a.at(i, j) > 1) return false;
            deg += a.at(i, j);
        }
        if (deg != 2) return false;
    }
    return true;
}

// floor(x + guard) + 1 dominates ceil(x) and matches what the distance
// arguments actually establish at integer thresholds.
inline long long ceiling_bound(double x) {
    return static_cast<long long>(std::floor(x + 1e-12)) + 1;
}

}  // namespace detail

inline const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = {
        "trace_L",      "trace_Q",          "regular_shift_L",
        "regular_shift_Q", "regular_shift_N", "charpoly_LQ_equal_under_AB",
        "rank_L",       "rs_regular_eigvec", "normalized_sum",
    };
    return ids;
}

inline const std::vector<std::string>& characterization_ids() {
    static const std::vector<std::string> ids = {
        "ab_iff_xi2n_zero_simple", "q_zero_mult_eq_AB_components",
        "n_zero_mult_eq_components", "nhat1_eq_2_iff_nontrivial_AB",
        "xi1_zero_iff_edgeless", "xi1_lt4_iff_AP", "xi1_eq4_iff_alt_cycle",
        "regular_iff_2r_eigvec_ones",
    };
    return ids;
}

inline const std::vector<std::string>& bound_ids() {
    static const std::vector<std::string> ids = {
        "L.avg",  "L.majorize", "L.split",    "L.arcavg",       "L.fact",
        "L.nonadj", "L.del",    "L.deg1",     "L.2n",           "L.adjsum",
        "L.sqrt", "L.avgnbr",   "L.interlace_arc",
        "Q.avg",  "Q.deg",      "Q.majorize", "Q.split",        "Q.interlace",
        "Q.fact", "Q.del",      "Q.range",
        "N.avg",  "N.43",       "N.contract", "N.disc",         "N.dist",
        "N.kdist",
    };
    return ids;
}

inline BoundReport verify_identity(const EvalContext& c, const std::string& id) {
    using namespace detail;
    const auto& opt = c.opt;
    int n = c.g.n;
    int N = c.order();

    if (id == "trace_L" || id == "trace_Q") {
        bool q = id == "trace_Q";
        long long want = q ? 4 * c.cnt.e + 8 * c.cnt.l + 2 * c.cnt.a
                           : 4 * c.cnt.e + 2 * c.cnt.a;
        long long tr = q ? c.IQ.exact_trace() : c.IL.exact_trace();
        const auto& vals = q ? c.eigQ.spectrum.values : c.eigL.spectrum.values;
        double sum = std::accumulate(vals.begin(), vals.end(), 0.0);
        double float_dev = std::fabs(sum - static_cast<double>(want));
        bool exact_ok = tr == want;
        double float_tol = 1e-9 * (1.0 + std::fabs(static_cast<double>(want)));
        return from_deviation(id, float_dev, float_tol,
                              "exact trace " + std::to_string(tr) + " vs " +
                                  std::to_string(want) + "; eigenvalue sum " + fmt(sum),
                              exact_ok);
    }
    if (id == "regular_shift_L" || id == "regular_shift_Q" || id == "regular_shift_N") {
        if (n < 1 || !c.reg.r) return not_applicable(id, "graph is not regular");
        long long r = *c.reg.r;
        if (id == "regular_shift_N" && r < 1)
            return not_applicable(id, "normalized shift needs degree at least 1");
        std::vector<double> shifted;
        shifted.reserve(N);
        for (double l : c.eigI.spectrum.values) {
            if (id == "regular_shift_L")
                shifted.push_back(static_cast<double>(r) - l);
            else if (id == "regular_shift_Q")
                shifted.push_back(static_cast<double>(r) + l);
            else
                shifted.push_back(1.0 - l / static_cast<double>(r));
        }
        const auto& direct = id == "regular_shift_L"   ? c.eigL.spectrum.values
                             : id == "regular_shift_Q" ? c.eigQ.spectrum.values
                                                       : c.eigN.spectrum.values;
        double dev = max_sorted_diff(direct, shifted);
        return from_deviation(id, dev, 1e-8, "r=" + std::to_string(r));
    }
    if (id == "charpoly_LQ_equal_under_AB") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        if (!c.pred.has_AB) return not_applicable(id, "graph lacks the AB property");
        if (N > opt.charpoly_max_order) return not_applicable(id, "order too large");
        bool equal = char_poly(c.IL) == char_poly(c.IQ);
        return from_flag(id, equal, equal ? "characteristic polynomials coincide"
                                          : "characteristic polynomials differ");
    }
    if (id == "rank_L") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        bool psd = c.nu(N) >= -1e-9;
        int rank = 0;
        for (double v : c.eigL.spectrum.values)
            if (v > opt.tol_zero) ++rank;
        int want = N - static_cast<int>(c.comps.components.size());
        BoundReport r = from_flag(id, psd && rank == want,
                                  "rank " + std::to_string(rank) + ", components " +
                                      std::to_string(c.comps.components.size()));
        r.lhs = rank;
        r.rhs = want;
        r.slack = static_cast<double>(want - rank);
        return r;
    }
    if (id == "rs_regular_eigvec") {
        if (n < 1) return not_applicable(id, "empty graph");
        bool rows_equal = true, diffs_ok = true;
        long long p = 0, q = 0;
        for (int i = 0; i < N; ++i) {
            long long row = 0, diff = 0;
            for (int j = 0; j < N; ++j) {
                long long x = c.IQ.iat(i, j);
                row += x;
                diff += (j < n ? x : -x);
            }
            long long want_diff_sign = i < n ? 1 : -1;
            if (i == 0) {
                p = row;
                q = diff;
            }
            if (row != p) rows_equal = false;
            if (diff != want_diff_sign * q) diffs_ok = false;
        }
        bool spectral = rows_equal && diffs_ok;
        bool structural = c.reg.rs.has_value();
        bool ok = structural == spectral;
        std::string note;
        if (structural && spectral) {
            auto [r, s] = *c.reg.rs;
            ok = ok && p == 2 * (r + s) && q == 2 * r;
            note = "r=" + std::to_string(r) + " s=" + std::to_string(s);
        } else {
            note = structural ? "structural only" : spectral ? "spectral only" : "neither side";
        }
        return from_flag(id, ok, note);
    }
    if (id == "normalized_sum") {
        if (n < 1 || !c.pred.loopless || !c.pred.plain)
            return not_applicable(id, "requires a loopless plain graph");
        double sum = std::accumulate(c.eigN.spectrum.values.begin(),
                                     c.eigN.spectrum.values.end(), 0.0);
        double want = static_cast<double>(N - c.pred.n_trivial_components);
        return from_deviation(id, std::fabs(sum - want), 1e-8,
                              "sum " + fmt(sum) + " vs " + fmt(want));
    }
    throw std::invalid_argument("unknown identity id: " + id);
}

inline BoundReport verify_characterization(const EvalContext& c, const std::string& id) {
    using namespace detail;
    const auto& opt = c.opt;
    int n = c.g.n;
    int N = c.order();

    if (id == "ab_iff_xi2n_zero_simple") {
        if (n < 1 || !c.pred.simple || !c.pred.uniconnected)
            return not_applicable(id, "requires a simple uniconnected graph");
        int mult0 = count_near(c.eigQ.spectrum.values, 0.0, opt.tol_zero);
        bool spectral = mult0 == 1;
        return from_flag(id, c.pred.has_AB == spectral,
                         "AB=" + std::to_string(c.pred.has_AB) +
                             ", zero multiplicity " + std::to_string(mult0));
    }
    if (id == "q_zero_mult_eq_AB_components") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        int mult0 = count_near(c.eigQ.spectrum.values, 0.0, opt.tol_zero);
        int bip = 0;
        for (const auto& comp : c.comps.components)
            if (comp.bipartite) ++bip;
        return from_flag(id, mult0 == bip,
                         "zero multiplicity " + std::to_string(mult0) +
                             ", bipartite components " + std::to_string(bip));
    }
    if (id == "n_zero_mult_eq_components") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        int mult0 = count_near(c.eigN.spectrum.values, 0.0, opt.tol_zero);
        int comps = static_cast<int>(c.comps.components.size());
        return from_flag(id, mult0 == comps,
                         "zero multiplicity " + std::to_string(mult0) + ", components " +
                             std::to_string(comps));
    }
    if (id == "nhat1_eq_2_iff_nontrivial_AB") {
        if (n < 1 || !c.pred.loopless || !c.pred.plain)
            return not_applicable(id, "requires a loopless plain graph");
        bool at_two = std::fabs(c.nh(1) - 2.0) <= opt.eq_tol;
        bool expect = c.pred.n_AB_nontrivial_components > 0;
        bool ok = at_two == expect;
        if (at_two) {
            int mult2 = count_near(c.eigN.spectrum.values, 2.0, opt.eq_tol);
            ok = ok && mult2 == c.pred.n_AB_nontrivial_components;
        }
        return from_flag(id, ok,
                         "nhat1=" + fmt(c.nh(1)) + ", nontrivial AB components " +
                             std::to_string(c.pred.n_AB_nontrivial_components));
    }
    if (id == "xi1_zero_iff_edgeless") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        bool zero = c.xi(1) <= opt.tol_zero;
        bool edgeless = c.cnt.e == 0 && c.cnt.a == 0;
        return from_flag(id, zero == edgeless, "xi1=" + fmt(c.xi(1)));
    }
    if (id == "xi1_lt4_iff_AP") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        bool below = c.xi(1) < 4.0 - opt.tol_zero;
        return from_flag(id, below == c.pred.ap_all_components,
                         "xi1=" + fmt(c.xi(1)) + ", AP=" +
                             std::to_string(c.pred.ap_all_components));
    }
    if (id == "xi1_eq4_iff_alt_cycle") {
        if (n < 1 || !c.pred.simple || !c.pred.uniconnected)
            return not_applicable(id, "requires a simple uniconnected graph");
        bool at_four = std::fabs(c.xi(1) - 4.0) <= opt.eq_tol;
        bool cyc = associated_is_cycle(c.assoc, c.comps);
        return from_flag(id, at_four == cyc,
                         "xi1=" + fmt(c.xi(1)) + ", double cover cycle=" + std::to_string(cyc));
    }
    if (id == "regular_iff_2r_eigvec_ones") {
        if (n < 1) return not_applicable(id, "empty graph");
        bool rows_equal = true;
        long long row0 = 0;
        for (int i = 0; i < N; ++i) {
            long long row = 0;
            for (int j = 0; j < N; ++j) row += c.IQ.iat(i, j);
            if (i == 0) row0 = row;
            if (row != row0) rows_equal = false;
        }
        bool structural = c.reg.r.has_value();
        bool ok = structural == rows_equal;
        if (structural && rows_equal) ok = ok && row0 == 2 * *c.reg.r;
        return from_flag(id, ok,
                         structural ? "r=" + std::to_string(*c.reg.r) : "not regular");
    }
    throw std::invalid_argument("unknown characterization id: " + id);
}

namespace detail {

inline EigenResult eig_of(const MixedGraph& h, MatrixKind kind, const VerifyOptions& opt) {
    switch (kind) {
        case MatrixKind::IL: return jacobi_eigen(integrated_laplacian(h), opt.tol_group);
        case MatrixKind::IQ: return jacobi_eigen(integrated_signless(h), opt.tol_group);
        case MatrixKind::IN: return jacobi_eigen(integrated_normalized(h), opt.tol_group);
        default: throw std::invalid_argument("unsupported kind");
    }
}

inline std::pair<MixedGraph, MixedGraph> random_factorization(const MixedGraph& g,
                                                              std::mt19937_64& rng) {
    MixedGraph g1(g.n), g2(g.n);
    for (const auto& [key, m] : g.edge_mult)
        ((rng() & 1) ? g1 : g2).edge_mult[key] = m;
    for (const auto& [key, m] : g.arc_mult)
        ((rng() & 1) ? g1 : g2).arc_mult[key] = m;
    return {g1, g2};
}

}  // namespace detail

inline BoundReport verify_bound(const EvalContext& c, const std::string& id) {
    using namespace detail;
    const auto& opt = c.opt;
    int n = c.g.n;
    int N = c.order();
    auto degA = c.assoc.adj.empty() ? std::vector<long long>{} : c.assoc.degrees();

    if (id == "L.avg") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        double mid = static_cast<double>(4 * c.cnt.e + 2 * c.cnt.a) / (2.0 * n - 1.0);
        return from_ineqs(id,
                          {{"nu_{2n-1} <= avg", c.nu(N - 1 >= 1 ? N - 1 : 1), mid},
                           {"avg <= nu_1", mid, c.nu(1)}},
                          opt, "avg=" + fmt(mid));
    }
    if (id == "L.majorize" || id == "Q.majorize") {
        bool q = id == "Q.majorize";
        if (n < 1) return not_applicable(id, "empty graph");
        if (!q && !c.pred.simple) return not_applicable(id, "requires a simple graph");
        std::vector<long long> d;
        for (const auto& p : c.degs) {
            d.push_back(p.d + p.d_plus + (q ? 2 * p.loops : 0));
            d.push_back(p.d + p.d_minus + (q ? 2 * p.loops : 0));
        }
        std::sort(d.begin(), d.end(), std::greater<long long>());
        const auto& vals = q ? c.eigQ.spectrum.values : c.eigL.spectrum.values;
        std::vector<Ineq> checks;
        double ev = 0, dv = 0;
        for (int k = 1; k <= N; ++k) {
            ev += vals[k - 1];
            dv += static_cast<double>(d[k - 1]);
            checks.push_back({"prefix k=" + std::to_string(k), dv, ev});
        }
        bool eq_end = std::fabs(ev - dv) <= 1e-8 * (1.0 + std::fabs(dv));
        return from_ineqs(id, checks, opt, "degree prefix sums", eq_end);
    }
    if (id == "L.split" || id == "Q.split") {
        bool q = id == "Q.split";
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        auto [gu, gd] = factorize(c.g);
        auto part = eig_of(gu, q ? MatrixKind::IQ : MatrixKind::IL, opt);
        double top = part.spectrum.values.empty() ? 0.0 : part.spectrum.values.front();
        long long mp = 0, mm = 0;
        for (const auto& p : c.degs) {
            mp = std::max(mp, p.d_plus);
            mm = std::max(mm, p.d_minus);
        }
        double rhs = 2.0 * top + static_cast<double>(mp + mm);
        double lhs = q ? c.xi(1) + c.xi(N) : c.nu(1);
        return from_ineqs(id, {{id, lhs, rhs}}, opt,
                          "undirected part top " + fmt(top));
    }
    if (id == "L.arcavg") {
        if (n < 1) return not_applicable(id, "empty graph");
        double mid = 2.0 * static_cast<double>(c.cnt.a) / n;
        return from_ineqs(id,
                          {{"nu_{2n-1} <= 2a/n", c.nu(N - 1 >= 1 ? N - 1 : 1), mid},
                           {"2a/n <= nu_1", mid, c.nu(1)}},
                          opt, "2a/n=" + fmt(mid));
    }
    if (id == "L.fact" || id == "Q.fact") {
        bool q = id == "Q.fact";
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        auto kind = q ? MatrixKind::IQ : MatrixKind::IL;
        auto rng = bound_rng(opt, q ? 21 : 20);
        std::vector<Ineq> checks;
        for (int t = 0; t < opt.instantiations; ++t) {
            auto [g1, g2] = random_factorization(c.g, rng);
            auto e1 = eig_of(g1, kind, opt);
            auto e2 = eig_of(g2, kind, opt);
            double top1 = e1.spectrum.values[0], top2 = e2.spectrum.values[0];
            double bot1 = e1.spectrum.values[N - 1], bot2 = e2.spectrum.values[N - 1];
            std::string tag = "draw " + std::to_string(t);
            if (q) {
                checks.push_back({tag + " max parts <= xi1", std::max(top1, top2), c.xi(1)});
                checks.push_back({tag + " xi1 <= sum", c.xi(1), top1 + top2});
                checks.push_back({tag + " bottom sum", bot1 + bot2, c.xi(N)});
            } else {
                double second = c.nu(N - 1 >= 1 ? N - 1 : 1);
                checks.push_back({tag + " second smallest", e1.spectrum.values[N - 2 >= 0 ? N - 2 : 0] +
                                                                e2.spectrum.values[N - 2 >= 0 ? N - 2 : 0],
                                  second});
                checks.push_back({tag + " max parts <= nu1", std::max(top1, top2), c.nu(1)});
                checks.push_back({tag + " nu1 <= sum", c.nu(1), top1 + top2});
            }
        }
        return from_ineqs(id, checks, opt,
                          std::to_string(opt.instantiations) + " random factorizations");
    }
    if (id == "L.nonadj") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        auto rng = bound_rng(opt, 22);
        std::vector<Ineq> checks;
        double second = c.nu(N - 1 >= 1 ? N - 1 : 1);
        int used = 0;
        for (int t = 0; t < opt.instantiations; ++t) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            const auto& pu = c.degs[u];
            const auto& pv = c.degs[v];
            bool any = false;
            if (u != v && c.g.edges_between(u, v) == 0) {
                checks.push_back({"pair plus", second,
                                  0.5 * static_cast<double>(pu.d + pv.d + pu.d_plus + pv.d_plus)});
                checks.push_back({"pair minus", second,
                                  0.5 * static_cast<double>(pu.d + pv.d + pu.d_minus + pv.d_minus)});
                any = true;
            }
            if (c.g.arcs_between(u, v) == 0) {
                checks.push_back({"pair arrow", second,
                                  0.5 * static_cast<double>(pu.d + pv.d + pu.d_plus + pv.d_minus)});
                any = true;
            }
            if (any) ++used;
        }
        if (checks.empty()) return not_applicable(id, "no qualifying vertex pair drawn");
        return from_ineqs(id, checks, opt,
                          std::to_string(used) + " qualifying draws");
    }
    if (id == "L.del") {
        if (n < 2 || !c.pred.simple)
            return not_applicable(id, "requires a simple graph on at least two vertices");
        auto rng = bound_rng(opt, 23);
        std::vector<Ineq> checks;
        double second = c.nu(N - 1);
        for (int t = 0; t < opt.instantiations; ++t) {
            int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> U(all.begin(), all.begin() + size);
            auto h = delete_vertices(c.g, U);
            auto eh = eig_of(h, MatrixKind::IL, opt);
            int k = n - size;
            double hval = eh.spectrum.values[2 * k - 2];  // index 2k-1, 1-based
            checks.push_back({"drop " + std::to_string(size), second,
                              hval + 2.0 * static_cast<double>(size)});
        }
        return from_ineqs(id, checks, opt,
                          std::to_string(opt.instantiations) + " vertex set draws");
    }
    if (id == "L.deg1") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        if (c.cnt.e == 0 && c.cnt.a == 0)
            return not_applicable(id, "needs at least one edge or arc");
        double lhs = static_cast<double>(std::max(c.Delta1, c.Delta2) + 1);
        return from_ineqs(id, {{"max degree plus one", lhs, c.nu(1)}}, opt,
                          "Delta=" + std::to_string(std::max(c.Delta1, c.Delta2)));
    }
    if (id == "L.2n") {
        if (n < 1 || !c.pred.loopless || !c.pred.plain)
            return not_applicable(id, "requires a loopless plain graph");
        bool eq_obs = std::fabs(c.nu(1) - 2.0 * n) <= opt.eq_tol;
        bool eq_pred = c.pred.uniconnected && complement_disconnected(c.assoc);
        std::string note = "nu1=" + fmt(c.nu(1));
        if (eq_obs) note += ", equality attained";
        return from_ineqs(id, {{"nu1 <= 2n", c.nu(1), 2.0 * n}}, opt, note,
                          eq_obs == eq_pred);
    }
    if (id == "L.adjsum") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        long long best = -1;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (c.assoc.at(i, j) > 0) best = std::max(best, degA[i] + degA[j]);
        if (best < 0) return not_applicable(id, "double cover has no edges");
        return from_ineqs(id, {{"nu1 <= max edge degree sum", c.nu(1),
                                static_cast<double>(best)}},
                          opt, "max sum " + std::to_string(best));
    }
    if (id == "L.sqrt") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        double best = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i == j) continue;
                double dd = static_cast<double>(degA[i] - degA[j]);
                best = std::max(best, std::sqrt(dd * dd + 4.0 * c.I.at(i, j)));
            }
        return from_ineqs(id, {{"pair lower bound", best, c.nu(1)}}, opt,
                          "best pair value " + fmt(best));
    }
    if (id == "L.avgnbr") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        std::vector<double> avg(N, 0.0);
        for (int i = 0; i < N; ++i) {
            if (degA[i] == 0) continue;
            double s = 0;
            for (int j = 0; j < N; ++j) s += static_cast<double>(c.assoc.at(i, j) * degA[j]);
            avg[i] = s / static_cast<double>(degA[i]);
        }
        double best = -1;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                if (c.assoc.at(i, j) == 0) continue;
                double di = static_cast<double>(degA[i]), dj = static_cast<double>(degA[j]);
                best = std::max(best, (di * (di + avg[i]) + dj * (dj + avg[j])) / (di + dj));
            }
        if (best < 0) return not_applicable(id, "double cover has no edges");
        return from_ineqs(id, {{"nu1 <= neighbor average bound", c.nu(1), best}}, opt,
                          "bound " + fmt(best));
    }
    if (id == "L.interlace_arc" || id == "Q.del") {
        bool q = id == "Q.del";
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        std::vector<VertexPair> arcs;
        for (const auto& [key, m] : c.g.arc_mult) arcs.push_back(key);
        if (arcs.empty()) return not_applicable(id, "graph has no arcs");
        auto rng = bound_rng(opt, q ? 25 : 24);
        if (static_cast<int>(arcs.size()) > opt.instantiations) {
            std::shuffle(arcs.begin(), arcs.end(), rng);
            arcs.resize(opt.instantiations);
        }
        const auto& gv = q ? c.eigQ.spectrum.values : c.eigL.spectrum.values;
        std::vector<Ineq> checks;
        for (const auto& [u, v] : arcs) {
            auto h = delete_arc(c.g, u, v);
            auto eh = eig_of(h, q ? MatrixKind::IQ : MatrixKind::IL, opt);
            const auto& hv = eh.spectrum.values;
            std::string tag = "arc " + std::to_string(u) + "->" + std::to_string(v);
            for (int i = 0; i < N; ++i) {
                checks.push_back({tag + " i=" + std::to_string(i + 1), hv[i], gv[i]});
                if (i + 1 < N)
                    checks.push_back({tag + " cross i=" + std::to_string(i + 2), gv[i + 1], hv[i]});
            }
            checks.push_back({tag + " bottom nonnegative", 0.0, hv[N - 1] + 1e-9});
        }
        return from_ineqs(id, checks, opt,
                          std::to_string(arcs.size()) + " arc deletions");
    }
    if (id == "Q.avg") {
        if (n < 1) return not_applicable(id, "empty graph");
        double mid = static_cast<double>(2 * c.cnt.e + 4 * c.cnt.l + c.cnt.a) / n;
        return from_ineqs(id,
                          {{"xi_{2n} <= avg", c.xi(N), mid}, {"avg <= xi_1", mid, c.xi(1)}},
                          opt, "avg=" + fmt(mid));
    }
    if (id == "Q.deg") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        double half = 0.5 * c.xi(1);
        double lo = static_cast<double>(std::min(c.delta1, c.delta2));
        double hi = static_cast<double>(std::max(c.Delta1, c.Delta2));
        bool extra = true;
        std::string note = "xi1/2=" + fmt(half);
        if (c.pred.uniconnected) {
            bool eq_any = std::fabs(half - lo) <= opt.eq_tol || std::fabs(half - hi) <= opt.eq_tol;
            extra = eq_any == c.reg.r.has_value();
            if (eq_any) note += ", equality attained";
        }
        return from_ineqs(id, {{"min degree <= xi1/2", lo, half}, {"xi1/2 <= max degree", half, hi}},
                          opt, note, extra);
    }
    if (id == "Q.interlace") {
        if (n < 1) return not_applicable(id, "empty graph");
        double a1 = 4.0 * static_cast<double>(c.cnt.e + c.cnt.l) / n;
        double a2 = 2.0 * static_cast<double>(2 * c.cnt.e + 2 * c.cnt.l + c.cnt.a) / n;
        return from_ineqs(id,
                          {{"xi_{2n} <= 4(e+l)/n", c.xi(N), a1},
                           {"4(e+l)/n <= xi_2", a1, c.xi(N >= 2 ? 2 : 1)},
                           {"xi_{2n-1} <= mean", c.xi(N - 1 >= 1 ? N - 1 : 1), a2},
                           {"mean <= xi_1", a2, c.xi(1)}},
                          opt, "interlacing values " + fmt(a1) + ", " + fmt(a2));
    }
    if (id == "Q.range") {
        if (n < 1 || !c.pred.uniconnected || !c.pred.loopless || !c.pred.plain)
            return not_applicable(id, "requires a uniconnected loopless plain graph");
        const double pi = std::acos(-1.0);
        double lo = 2.0 + 2.0 * std::cos(pi / (2.0 * n));
        double hi = 4.0 * n - 2.0;
        bool extra = true;
        std::string note = "window [" + fmt(lo) + ", " + fmt(hi) + "]";
        if (c.pred.ap_all_components) {
            extra = extra && std::fabs(c.xi(1) - lo) <= opt.eq_tol;
            note += ", lower equality (AP)";
        }
        if (c.pred.directed_loop_complete) {
            extra = extra && std::fabs(c.xi(1) - hi) <= opt.eq_tol;
            note += ", upper equality (directed loop complete)";
        }
        return from_ineqs(id, {{"lower", lo, c.xi(1)}, {"upper", c.xi(1), hi}}, opt, note,
                          extra);
    }
    if (id == "N.avg") {
        if (n < 1 || !c.pred.loopless || !c.pred.plain)
            return not_applicable(id, "requires a loopless plain graph");
        double mid = static_cast<double>(N - c.pred.n_trivial_components) / (2.0 * n - 1.0);
        return from_ineqs(id,
                          {{"nhat_{2n-1} <= mid", c.nh(N - 1 >= 1 ? N - 1 : 1), mid},
                           {"mid <= nhat_1", mid, c.nh(1)}},
                          opt, "mid=" + fmt(mid));
    }
    if (id == "N.43") {
        if (n < 1 || !c.pred.loopless || !c.pred.plain)
            return not_applicable(id, "requires a loopless plain graph");
        double sum = std::accumulate(c.eigN.spectrum.values.begin(),
                                     c.eigN.spectrum.values.end(), 0.0);
        int k = c.pred.n_trivial_components;
        bool dlc = c.pred.directed_loop_complete;
        std::vector<Ineq> checks;
        bool extra = true;
        std::string note = "sum=" + fmt(sum) + ", trivial=" + std::to_string(k);
        checks.push_back({"sum <= 2n", sum, static_cast<double>(N)});
        bool sum_eq = std::fabs(sum - static_cast<double>(N)) <= opt.eq_tol;
        extra = extra && (sum_eq == (k == 0));
        extra = extra && std::fabs(sum - static_cast<double>(N - k)) <= 1e-8;
        if (!dlc && N >= 2) checks.push_back({"second smallest <= 1", c.nh(N - 1), 1.0});
        if (k == 0 && N >= 2) {
            double edge = 2.0 * n / (2.0 * n - 1.0);
            checks.push_back({"second smallest <= 2n/(2n-1)", c.nh(N - 1), edge});
            checks.push_back({"2n/(2n-1) <= largest", edge, c.nh(1)});
            bool eq_small = std::fabs(c.nh(N - 1) - edge) <= opt.eq_tol;
            bool eq_large = std::fabs(c.nh(1) - edge) <= opt.eq_tol;
            extra = extra && (eq_small == dlc) && (eq_large == dlc);
        }
        checks.push_back({"largest <= 2", c.nh(1), 2.0});
        bool at_two = std::fabs(c.nh(1) - 2.0) <= opt.eq_tol;
        extra = extra && (at_two == (c.pred.n_AB_nontrivial_components > 0));
        return from_ineqs(id, checks, opt, note, extra);
    }
    if (id == "N.contract") {
        if (n < 2 || !c.pred.simple)
            return not_applicable(id, "requires a simple graph on at least two vertices");
        auto rng = bound_rng(opt, 26);
        std::vector<Ineq> checks;
        int used = 0;
        for (int t = 0; t < opt.instantiations; ++t) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u == v || c.g.edges_between(u, v) != 0) continue;
            auto h = identify_vertices(c.g, u, v);
            auto eh = eig_of(h, MatrixKind::IN, opt);
            double hval = eh.spectrum.values[2 * (n - 1) - 2];  // second smallest of H
            checks.push_back({"identify " + std::to_string(u) + "," + std::to_string(v),
                              c.nh(N - 1), hval});
            ++used;
        }
        if (checks.empty()) return not_applicable(id, "no non-adjacent pair drawn");
        return from_ineqs(id, checks, opt, std::to_string(used) + " contractions");
    }
    if (id == "N.disc") {
        if (n < 1 || !c.pred.simple) return not_applicable(id, "requires a simple graph");
        if (c.cnt.e == 0 && c.cnt.a == 0)
            return not_applicable(id, "needs at least one edge or arc");
        double dev = c.normalized_deviation();
        double volume = static_cast<double>(4 * c.cnt.e + 2 * c.cnt.a);
        auto rng = bound_rng(opt, 27);
        std::vector<Ineq> checks;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (int t = 0; t < opt.instantiations; ++t) {
            auto X = random_subset(rng, n);
            auto Y = random_subset(rng, n);
            std::vector<int> Xc, Yc;
            for (int v : all) {
                if (std::find(X.begin(), X.end(), v) == X.end()) Xc.push_back(v);
                if (std::find(Y.begin(), Y.end(), v) == Y.end()) Yc.push_back(v);
            }
            double vx = static_cast<double>(vl(c.g, X));
            double vy = static_cast<double>(vl(c.g, Y));
            double vxc = static_cast<double>(vl(c.g, Xc));
            double vyc = static_cast<double>(vl(c.g, Yc));
            double pairing = static_cast<double>(assoc_pairing(c.g, c.assoc, X, Y));
            double lhs = std::fabs(pairing - vx * vy / volume);
            std::string tag = "draw " + std::to_string(t);
            checks.push_back({tag + " plain", lhs, dev * std::sqrt(vx * vy)});
            checks.push_back({tag + " refined", lhs,
                              dev * std::sqrt(vx * vy * vxc * vyc) / volume});
        }
        return from_ineqs(id, checks, opt,
                          std::to_string(opt.instantiations) + " subset pairs, deviation " +
                              fmt(dev));
    }
    if (id == "N.dist") {
        if (n < 2 || !c.pred.simple || !c.pred.uniconnected)
            return not_applicable(id, "requires a simple uniconnected graph on >= 2 vertices");
        double top = c.nh(1), small = c.nh(N - 1);
        if (top - small <= 1e-9)
            return not_applicable(id, "eigenvalue gap vanishes");
        double den = std::acosh((top + small) / (top - small));
        if (!(den > 1e-12)) return not_applicable(id, "log denominator vanishes");
        auto rng = bound_rng(opt, 28);
        std::vector<Ineq> checks;
        int used = 0;
        for (int t = 0; t < opt.instantiations; ++t) {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            int sx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            int sy = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - sx));
            std::vector<int> X(all.begin(), all.begin() + sx);
            std::vector<int> Y(all.begin() + sx, all.begin() + sx + sy);
            std::vector<int> Xc, Yc;
            for (int v = 0; v < n; ++v) {
                if (std::find(X.begin(), X.end(), v) == X.end()) Xc.push_back(v);
                if (std::find(Y.begin(), Y.end(), v) == Y.end()) Yc.push_back(v);
            }
            double ratio = static_cast<double>(vl(c.g, Xc)) * static_cast<double>(vl(c.g, Yc)) /
                           (static_cast<double>(vl(c.g, X)) * static_cast<double>(vl(c.g, Y)));
            if (!(ratio >= 1.0)) continue;
            auto dist = set_distance(c.g, c.assoc, X, Y);
            if (!dist) continue;
            double num = std::acosh(std::sqrt(ratio));
            checks.push_back({"draw " + std::to_string(t), static_cast<double>(*dist),
                              static_cast<double>(ceiling_bound(num / den))});
            ++used;
        }
        if (checks.empty()) return not_applicable(id, "no usable subset draw");
        return from_ineqs(id, checks, opt, std::to_string(used) + " subset pair draws");
    }
    if (id == "N.kdist") {
        if (n < 3 || !c.pred.simple || !c.pred.uniconnected)
            return not_applicable(id, "requires a simple uniconnected graph on >= 3 vertices");
        auto rng = bound_rng(opt, 29);
        std::vector<Ineq> checks;
        int used = 0;
        for (int t = 0; t < opt.instantiations; ++t) {
            int k = 2 + static_cast<int>(rng() % 2);
            if (k > n - 1) k = 2;
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<std::vector<int>> sets(k);
            int pos = 0;
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                int remaining = n - pos - (k - 1 - i);
                if (remaining < 1) {
                    ok = false;
                    break;
                }
                int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                    std::max(1, remaining / (k - i))));
                sets[i].assign(all.begin() + pos, all.begin() + pos + size);
                pos += size;
            }
            if (!ok || pos >= n) continue;  // keep every set proper
            long long lhsd = std::numeric_limits<long long>::max();
            double max_num = 0;
            bool fail = false;
            for (int i = 0; i < k && !fail; ++i)
                for (int j = 0; j < k; ++j) {
                    if (i == j) continue;
                    auto dij = set_distance(c.g, c.assoc, sets[i], sets[j]);
                    if (!dij) {
                        fail = true;
                        break;
                    }
                    lhsd = std::min(lhsd, *dij);
                    std::vector<int> ic, jc;
                    for (int v = 0; v < n; ++v) {
                        if (std::find(sets[i].begin(), sets[i].end(), v) == sets[i].end())
                            ic.push_back(v);
                        if (std::find(sets[j].begin(), sets[j].end(), v) == sets[j].end())
                            jc.push_back(v);
                    }
                    double ratio = static_cast<double>(vl(c.g, ic)) *
                                   static_cast<double>(vl(c.g, jc)) /
                                   (static_cast<double>(vl(c.g, sets[i])) *
                                    static_cast<double>(vl(c.g, sets[j])));
                    if (!(ratio >= 1.0)) {
                        fail = true;
                        break;
                    }
                    max_num = std::max(max_num, std::log(std::sqrt(ratio)));
                }
            if (fail) continue;
            double top = c.nh(1);
            double lam = c.nh(N - k + 1);
            std::string tag = "draw " + std::to_string(t) + " k=" + std::to_string(k);
            bool any_part = false;
            if (lam > opt.tol_zero && lam < 1.0 - 1e-12 && 1.0 - lam >= top - 1.0 - 1e-12) {
                double den = std::log(1.0 / (1.0 - lam));
                if (den > 1e-12) {
                    checks.push_back({tag + " part (i)", static_cast<double>(lhsd),
                                      static_cast<double>(ceiling_bound(max_num / den))});
                    any_part = true;
                }
            }
            if (lam > opt.tol_zero && top - lam > 1e-9) {
                double den = std::log((top + lam) / (top - lam));
                if (den > 1e-12) {
                    checks.push_back({tag + " part (ii)", static_cast<double>(lhsd),
                                      static_cast<double>(ceiling_bound(max_num / den))});
                    any_part = true;
                }
            }
            double best = std::numeric_limits<double>::infinity();
            for (int tt = 1; tt < k; ++tt) {
                double a = c.nh(tt);
                double b = c.nh(N - k + tt);
                if (!(b > opt.tol_zero) || !(a - b > 1e-9)) continue;
                double den = std::log((a + b) / (a - b));
                if (!(den > 1e-12)) continue;
                best = std::min(best, static_cast<double>(ceiling_bound(max_num / den)));
            }
            if (std::isfinite(best)) {
                checks.push_back({tag + " part (iii)", static_cast<double>(lhsd), best});
                any_part = true;
            }
            if (any_part) ++used;
        }
        if (checks.empty()) return not_applicable(id, "no usable family draw");
        return from_ineqs(id, checks, opt, std::to_string(used) + " family draws");
    }
    throw std::invalid_argument("unknown bound id: " + id);
}

inline std::vector<BoundReport> run_all(const EvalContext& c) {
    std::vector<BoundReport> out;
    for (const auto& id : identity_ids()) out.push_back(verify_identity(c, id));
    for (const auto& id : characterization_ids()) out.push_back(verify_characterization(c, id));
    for (const auto& id : bound_ids()) out.push_back(verify_bound(c, id));
    return out;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<BoundReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["bound_id"] = r.bound_id;
        j["applicable"] = r.applicable;
        if (r.lhs) j["lhs"] = *r.lhs;
        if (r.rhs) j["rhs"] = *r.rhs;
        if (r.slack) j["slack"] = *r.slack;
        j["holds"] = r.holds;
        j["witness"] = r.witness;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string reports_to_csv(const std::vector<BoundReport>& reports) {
    std::string out = "bound_id,applicable,holds,slack\n";
    char buf[64];
    for (const auto& r : reports) {
        out += r.bound_id;
        out += r.applicable ? ",true" : ",false";
        out += r.holds ? ",true" : ",false";
        if (r.slack) {
            std::snprintf(buf, sizeof buf, ",%.12g", *r.slack);
            out += buf;
        } else {
            out += ",";
        }
        out += '\n';
    }
    return out;
}

}  // namespace mgspec
