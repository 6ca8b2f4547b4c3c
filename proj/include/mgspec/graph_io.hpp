#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "associated_graph.hpp"
#include "eigen.hpp"
#include "matrices.hpp"
#include "mixed_graph.hpp"
#include "theorems.hpp"

namespace mgspec {

inline constexpr const char* tool_name = "mgspec";
inline constexpr const char* tool_version = "0.3.0";

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

struct NamedGraph {
    MixedGraph g{0};
    std::vector<std::string> names;          // declaration order fixes the index order
    std::map<std::string, int> index;

    int intern(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = g.n;
        index.emplace(name, id);
        names.push_back(name);
        g.n += 1;
        return id;
    }

    int lookup(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end()) throw std::invalid_argument("unknown vertex: " + name);
        return it->second;
    }
};

namespace detail {

inline long long parse_mult(const std::string& tok, int line) {
    size_t pos = 0;
    long long m = 0;
    try {
        m = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(line, "bad multiplicity '" + tok + "'");
    }
    if (pos != tok.size()) throw parse_error(line, "bad multiplicity '" + tok + "'");
    if (m <= 0) throw parse_error(line, "multiplicity must be positive, got " + tok);
    return m;
}

}  // namespace detail

inline NamedGraph parse_graph(const std::string& text) {
    NamedGraph out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& dir = tok[0];
        if (dir == "V") {
            if (tok.size() < 2) throw parse_error(lineno, "V needs at least one vertex name");
            for (size_t i = 1; i < tok.size(); ++i) out.intern(tok[i]);
        } else if (dir == "E" || dir == "A") {
            if (tok.size() < 3 || tok.size() > 4)
                throw parse_error(lineno, dir + " needs two vertices and an optional multiplicity");
            int u = out.intern(tok[1]);
            int v = out.intern(tok[2]);
            long long m = tok.size() == 4 ? detail::parse_mult(tok[3], lineno) : 1;
            if (dir == "E")
                out.g.add_edge(u, v, m);
            else
                out.g.add_arc(u, v, m);
        } else {
            throw parse_error(lineno, "unknown directive '" + dir + "'");
        }
    }
    return out;
}

inline std::string render_graph(const NamedGraph& ng) {
    std::string out;
    for (const auto& name : ng.names) out += "V " + name + "\n";
    for (const auto& [key, m] : ng.g.edge_mult) {
        out += "E " + ng.names[key.first] + " " + ng.names[key.second];
        if (m != 1) out += " " + std::to_string(m);
        out += "\n";
    }
    for (const auto& [key, m] : ng.g.arc_mult) {
        out += "A " + ng.names[key.first] + " " + ng.names[key.second];
        if (m != 1) out += " " + std::to_string(m);
        out += "\n";
    }
    return out;
}

inline NamedGraph with_default_names(MixedGraph g) {
    NamedGraph ng;
    ng.g = std::move(g);
    for (int v = 0; v < ng.g.n; ++v) {
        ng.names.push_back("v" + std::to_string(v + 1));
        ng.index.emplace(ng.names.back(), v);
    }
    return ng;
}

inline std::string render_graph(const MixedGraph& g) { return render_graph(with_default_names(g)); }

inline nlohmann::ordered_json graph_summary_json(const EvalContext& c) {
    nlohmann::ordered_json j;
    j["n"] = c.g.n;
    j["e"] = c.cnt.e;
    j["a"] = c.cnt.a;
    j["l"] = c.cnt.l;
    nlohmann::ordered_json p;
    p["uniconnected"] = c.pred.uniconnected;
    p["AB"] = c.pred.has_AB;
    p["AP_all_components"] = c.pred.ap_all_components;
    p["plain"] = c.pred.plain;
    p["loopless"] = c.pred.loopless;
    p["simple"] = c.pred.simple;
    p["directed_loop_complete"] = c.pred.directed_loop_complete;
    p["trivial_components"] = c.pred.n_trivial_components;
    p["components"] = c.comps.components.size();
    j["predicates"] = std::move(p);
    return j;
}

inline nlohmann::ordered_json spectrum_json(const Spectrum& s) {
    nlohmann::ordered_json j;
    j["tol_group"] = s.tol_group;
    auto groups = nlohmann::ordered_json::array();
    for (const auto& [value, mult] : s.groups)
        groups.push_back(nlohmann::ordered_json{{"value", value}, {"multiplicity", mult}});
    j["groups"] = std::move(groups);
    return j;
}

struct RunReportInputs {
    std::vector<std::string> matrices;             // names of matrices requested
    std::vector<std::pair<std::string, const Spectrum*>> spectra;
    const std::vector<BoundReport>* reports = nullptr;
};

inline nlohmann::ordered_json run_report(const EvalContext& c, const RunReportInputs& in) {
    nlohmann::ordered_json j;
    j["tool"] = nlohmann::ordered_json{{"name", tool_name}, {"version", tool_version}};
    j["seed"] = c.opt.seed;
    j["tolerances"] = nlohmann::ordered_json{{"tol_group", c.opt.tol_group},
                                             {"tol_zero", c.opt.tol_zero},
                                             {"slack_tol", c.opt.slack_tol},
                                             {"eq_tol", c.opt.eq_tol}};
    j["graph"] = graph_summary_json(c);
    j["matrices"] = in.matrices;
    nlohmann::ordered_json spectra;
    for (const auto& [name, spec] : in.spectra) spectra[name] = spectrum_json(*spec);
    j["spectra"] = std::move(spectra);
    if (in.reports) j["reports"] = reports_to_json(*in.reports);
    return j;
}

}  // namespace mgspec
